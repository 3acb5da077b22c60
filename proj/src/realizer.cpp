#include "posetdim/realizer.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetdim {

std::optional<std::size_t> ReachSet::distance(Element z) const {
    auto it = std::lower_bound(dist.begin(), dist.end(), z,
                               [](const auto& entry, Element e) { return entry.first < e; });
    if (it == dist.end() || it->first != z) return std::nullopt;
    return it->second;
}

bool ReachSet::reaches(Element z, std::size_t within) const {
    auto d = distance(z);
    return d && *d <= within;
}

ReachSet reach_set(const RootedSubtreeModel& model, Element x, std::size_t horizon) {
    // Breadth-first over arcs y -> y' with r(y) in T(y').
    std::vector<std::pair<Element, std::size_t>> found{{x, 0}};
    std::deque<std::pair<Element, std::size_t>> queue{{x, 0}};
    std::vector<Element> visited{x};
    while (!queue.empty()) {
        auto [y, d] = queue.front();
        queue.pop_front();
        if (d == horizon) continue;
        for (Element next : model.occupants(model.root_of(y))) {
            if (std::find(visited.begin(), visited.end(), next) != visited.end()) continue;
            visited.push_back(next);
            found.emplace_back(next, d + 1);
            queue.emplace_back(next, d + 1);
        }
    }
    std::sort(found.begin(), found.end());
    return {horizon, std::move(found)};
}

ReachIndex::ReachIndex(const RootedSubtreeModel& model, std::size_t horizon) : horizon_(horizon) {
    sets_.reserve(model.element_count());
    for (Element x = 0; x < model.element_count(); ++x) sets_.push_back(reach_set(model, x, horizon));
}

Element low_point(const Poset& poset, const ReachIndex& reach, std::size_t h, Element x, Element y) {
    if (!poset.le(x, y)) throw std::invalid_argument("low_point needs x <= y");
    if (h == 0 || reach.horizon() + 1 < h) throw std::invalid_argument("reach horizon below h-1");
    const std::size_t k = h - 1;
    for (const auto& [z, d] : reach.from(x).dist) {
        if (d > k || !poset.le(x, z) || !poset.le(z, y)) continue;
        if (reach.reaches(y, z, k)) return z;
    }
    throw LemmaViolation("no low point for comparable pair (" + std::to_string(x) + "," +
                         std::to_string(y) + ") within " + std::to_string(k) + " steps");
}

std::size_t PhiColoring::color_count() const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
}

PhiColoring phi_coloring(const RootedSubtreeModel& model, const ReachIndex& reach) {
    const std::size_t n = model.element_count();
    PhiColoring phi;
    phi.color.assign(n, 0);
    phi.order.resize(n);
    for (Element x = 0; x < n; ++x) phi.order[x] = x;
    std::sort(phi.order.begin(), phi.order.end(), [&](Element a, Element b) {
        return model.l1_pos(model.root_of(a)) < model.l1_pos(model.root_of(b));
    });

    std::vector<bool> taken;
    for (Element x : phi.order) {
        taken.assign(reach.from(x).dist.size() + 2, false);
        for (const auto& [z, d] : reach.from(x).dist) {
            if (z == x) continue;
            // Roots of reachable elements lie below r(x), hence earlier in L1.
            if (phi.color[z] == 0)
                throw LemmaViolation("element " + std::to_string(z) + " reachable from " +
                                     std::to_string(x) + " is not yet coloured");
            if (phi.color[z] < taken.size()) taken[phi.color[z]] = true;
        }
        std::size_t c = 1;
        while (taken[c]) ++c;
        phi.color[x] = c;
    }
    return phi;
}

TauColoring tau_coloring(const Poset& poset, const PhiColoring& phi, const ReachIndex& reach) {
    const std::size_t n = poset.size();
    TauColoring out;
    out.tau.resize(n);
    for (Element x = 0; x < n; ++x) {
        TauColor& color = out.tau[x];
        for (const auto& [z, d] : reach.from(x).dist) {
            PairRelation rel = x == z               ? PairRelation::eq
                               : poset.lt(x, z)     ? PairRelation::lt
                               : poset.lt(z, x)     ? PairRelation::gt
                                                    : PairRelation::inc;
            color.push_back({phi.color[x], phi.color[z], rel});
        }
        std::sort(color.begin(), color.end());
        color.erase(std::unique(color.begin(), color.end()), color.end());
    }

    std::vector<TauColor> distinct = out.tau;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    out.class_count = distinct.size();
    out.class_of.resize(n);
    for (Element x = 0; x < n; ++x)
        out.class_of[x] = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), out.tau[x]) - distinct.begin());
    return out;
}

int signature_case(const Poset& poset, const RootedSubtreeModel& model, const TauColoring& tau,
                   OrderedPair pair) {
    const auto [x, y] = pair;
    if (!poset.incomparable(x, y)) throw InvalidPair(pair);
    const Node rx = model.root_of(x);
    const Node ry = model.root_of(y);
    switch (model.relation(rx, ry)) {
        case NodeRelation::below: return 1;
        case NodeRelation::above: return 2;
        case NodeRelation::left_of:
            for (Element y2 = 0; y2 < poset.size(); ++y2) {
                if (tau.class_of[y2] != tau.class_of[y] || !poset.le(x, y2)) continue;
                if (model.relation(model.root_of(y2), ry) != NodeRelation::left_of) return 4;
            }
            return 3;
        case NodeRelation::right_of:
            for (Element x2 = 0; x2 < poset.size(); ++x2) {
                if (tau.class_of[x2] != tau.class_of[x] || !poset.le(x2, y)) continue;
                if (model.relation(model.root_of(x2), rx) != NodeRelation::left_of) return 6;
            }
            return 5;
        case NodeRelation::equal: break;
    }
    throw LemmaViolation("distinct elements " + std::to_string(x) + ", " + std::to_string(y) +
                         " share a root");
}

Signature signature(const Poset& poset, const RootedSubtreeModel& model, const TauColoring& tau,
                    OrderedPair pair) {
    return {tau.tau[pair.x], tau.tau[pair.y], signature_case(poset, model, tau, pair)};
}

SignaturePartition partition_by_signature(const Poset& poset, const RootedSubtreeModel& model,
                                          const TauColoring& tau) {
    std::map<std::tuple<std::size_t, std::size_t, int>, PairList> by_key;
    for (const auto& p : incomparable_pairs(poset)) {
        const int c = signature_case(poset, model, tau, p);
        by_key[{tau.class_of[p.x], tau.class_of[p.y], c}].push_back(p);
    }
    SignaturePartition out;
    for (auto& [key, pairs] : by_key) {
        const OrderedPair any = pairs.front();
        out.emplace(Signature{tau.tau[any.x], tau.tau[any.y], std::get<2>(key)}, std::move(pairs));
    }
    return out;
}

namespace {

struct Colorings {
    std::size_t h;
    ReachIndex reach;
    PhiColoring phi;
    TauColoring tau;
};

Colorings compute_colorings(const Poset& poset, const RootedSubtreeModel& model) {
    if (poset.size() == 0) throw std::invalid_argument("empty poset");
    if (model.element_count() != poset.size())
        throw std::invalid_argument("model and poset have different ground sets");
    const std::size_t h = height(poset);
    ReachIndex reach(model, 2 * h - 2);
    PhiColoring phi = phi_coloring(model, reach);
    TauColoring tau = tau_coloring(poset, phi, reach);
    return {h, std::move(reach), std::move(phi), std::move(tau)};
}

std::string dump_class(const Signature& sig, const AlternatingCycle& witness) {
    std::ostringstream os;
    os << "signature class (case " << sig.case_id << ") is not reversible; witness:";
    for (const auto& [x, y] : witness.pairs) os << " (" << x << ',' << y << ')';
    auto print_tau = [&](const char* name, const TauColor& c) {
        os << "; " << name << " = {";
        for (std::size_t i = 0; i < c.size(); ++i)
            os << (i ? " " : "") << '(' << c[i].phi_x << ',' << c[i].phi_z << ','
               << static_cast<int>(c[i].rel) << ')';
        os << '}';
    };
    print_tau("tau_x", sig.tau_x);
    print_tau("tau_y", sig.tau_y);
    return os.str();
}

}  // namespace

SignaturePartition partition_by_signature(const Poset& poset, const RootedSubtreeModel& model) {
    const Colorings c = compute_colorings(poset, model);
    return partition_by_signature(poset, model, c.tau);
}

Construction build_realizer(const Poset& poset, const TreeDecomposition& td,
                            const ModelOptions& options) {
    const Graph cover = cover_graph(poset);
    const WidthReport width = validate_td(cover, td);
    const RootedSubtreeModel model = build_model(cover, td, options);
    const Colorings c = compute_colorings(poset, model);

    Construction out;
    out.classes = partition_by_signature(poset, model, c.tau);
    for (const auto& [sig, pairs] : out.classes) {
        if (auto witness = find_alternating_cycle(poset, pairs))
            throw LemmaViolation(dump_class(sig, *witness));
        out.realizer.extensions.push_back(reversing_extension(poset, pairs));
        out.report.class_sizes.push_back(pairs.size());
    }
    if (out.realizer.extensions.empty()) out.realizer.extensions.push_back(any_linear_extension(poset));

    ConstructionReport& r = out.report;
    r.n = poset.size();
    r.h = c.h;
    r.t = width.width;
    r.p = c.phi.color_count();
    r.tau_class_count = c.tau.class_count;
    r.d_used = out.realizer.size();
    try {
        r.bound_log2 = theoretical_bound_log2(r.t, r.h);
    } catch (const std::overflow_error&) {
        r.bound_log2 = std::numeric_limits<double>::infinity();
    }
    r.phi_bound = geometric_sum(r.t, 2 * r.h - 2);
    r.phi_bound_ok = r.p <= r.phi_bound;
    r.signature_bound_ok = r.d_used <= 6 * r.tau_class_count * r.tau_class_count;
    r.classes_reversible = true;
    r.verified = verify_realizer(poset, out.realizer.extensions);
    return out;
}

double theoretical_bound_log2(std::uint64_t t, std::uint64_t h) {
    if (h == 0) throw std::invalid_argument("height must be positive");
    using boost::multiprecision::cpp_int;
    const cpp_int power = boost::multiprecision::pow(cpp_int(t), static_cast<unsigned>(4 * h - 2));
    if (power > cpp_int(DBL_MAX / 8)) throw std::overflow_error("t^(4h-2) too large");
    return std::log2(6.0) + 8.0 * power.convert_to<double>();
}

std::uint64_t geometric_sum(std::uint64_t t, std::uint64_t k) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    for (std::uint64_t i = 0; i <= k; ++i) {
        if (sum > kMax - term) return kMax;
        sum += term;
        if (i == k) break;
        if (t != 0 && term > kMax / t) {
            // The next term alone overflows.
            return kMax;
        }
        term *= t;
    }
    return sum;
}

}  // namespace posetdim
