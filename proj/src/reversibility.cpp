#include "posetdim/reversibility.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>

namespace posetdim {

namespace {

std::string pair_text(OrderedPair p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string cycle_text(const AlternatingCycle& c) {
    std::string s = "alternating cycle:";
    for (const auto& p : c.pairs) s += " " + pair_text(p);
    return s;
}

PairList normalized(const Poset& poset, std::span<const OrderedPair> pairs) {
    PairList out(pairs.begin(), pairs.end());
    for (const auto& p : out) {
        if (p.x >= poset.size() || p.y >= poset.size() || !poset.incomparable(p.x, p.y))
            throw InvalidPair(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

InvalidPair::InvalidPair(OrderedPair pair)
    : std::invalid_argument("pair " + pair_text(pair) + " is not an incomparable pair"),
      pair_(pair) {}

NotReversible::NotReversible(AlternatingCycle witness)
    : std::runtime_error("pair set is not reversible: " + cycle_text(witness)),
      witness_(std::move(witness)) {}

DimensionNotFound::DimensionNotFound(std::size_t d_max)
    : std::runtime_error("dimension exceeds " + std::to_string(d_max)), d_max_(d_max) {}

bool is_alternating_cycle(const Poset& poset, const AlternatingCycle& cycle) {
    const auto& c = cycle.pairs;
    if (c.size() < 2) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].x >= poset.size() || c[i].y >= poset.size()) return false;
        if (!poset.incomparable(c[i].x, c[i].y)) return false;
        if (!poset.le(c[i].x, c[(i + 1) % c.size()].y)) return false;
    }
    return true;
}

std::optional<AlternatingCycle> find_alternating_cycle(const Poset& poset,
                                                       std::span<const OrderedPair> input) {
    const PairList pairs = normalized(poset, input);
    const std::size_t m = pairs.size();

    std::vector<std::vector<std::size_t>> succ(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && poset.le(pairs[i].x, pairs[j].y)) succ[i].push_back(j);

    enum : unsigned char { white, grey, black };
    std::vector<unsigned char> color(m, white);
    std::vector<std::size_t> parent(m, m);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t s = 0; s < m; ++s) {
        if (color[s] != white) continue;
        color[s] = grey;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == succ[v].size()) {
                color[v] = black;
                stack.pop_back();
                continue;
            }
            std::size_t w = succ[v][next++];
            if (color[w] == white) {
                color[w] = grey;
                parent[w] = v;
                stack.emplace_back(w, 0);
            } else if (color[w] == grey) {
                AlternatingCycle cycle;
                for (std::size_t u = v; u != w; u = parent[u]) cycle.pairs.push_back(pairs[u]);
                cycle.pairs.push_back(pairs[w]);
                std::reverse(cycle.pairs.begin(), cycle.pairs.end());
                return cycle;
            }
        }
    }
    return std::nullopt;
}

LinearExtension reversing_extension(const Poset& poset, std::span<const OrderedPair> input) {
    const PairList pairs = normalized(poset, input);
    const std::size_t n = poset.size();

    // Kahn's algorithm on the order relation plus an arc y -> x per pair.
    std::vector<std::vector<Element>> extra(n);
    std::vector<std::size_t> indegree(n, 0);
    for (Element v = 0; v < n; ++v) indegree[v] = poset.down_set(v).count();
    for (const auto& [x, y] : pairs) {
        extra[y].push_back(x);
        ++indegree[x];
    }

    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);

    LinearExtension ext;
    ext.order.reserve(n);
    while (!ready.empty()) {
        Element v = ready.top();
        ready.pop();
        ext.order.push_back(v);
        auto release = [&](Element w) {
            if (--indegree[w] == 0) ready.push(w);
        };
        const Bits& up = poset.up_set(v);
        for (auto w = up.find_first(); w != Bits::npos; w = up.find_next(w)) release(w);
        for (Element w : extra[v]) release(w);
    }

    if (ext.order.size() != n) {
        auto witness = find_alternating_cycle(poset, pairs);
        if (!witness) throw std::logic_error("topological sort failed without an alternating cycle");
        throw NotReversible(std::move(*witness));
    }
    return ext;
}

namespace {

// Backtracking assignment of incomparable pairs to buckets. Each bucket
// keeps the transitive closure of P's order augmented by "y below x" for
// its pairs, so a pair fits a bucket iff x is not already below y there.
class PartitionSearch {
public:
    PartitionSearch(const Poset& poset, PairList pairs, std::size_t buckets)
        : n_(poset.size()), pairs_(std::move(pairs)), d_(buckets),
          assigned_(pairs_.size(), kNone) {
        std::vector<std::uint64_t> base(n_, 0);
        for (Element a = 0; a < n_; ++a)
            for (auto b = poset.up_set(a).find_first(); b != Bits::npos;
                 b = poset.up_set(a).find_next(b))
                base[a] |= bit(b);
        above_.assign(d_, base);

        // Fail-first tie-breaking: pairs with many pair-digraph arcs first.
        const std::size_t m = pairs_.size();
        std::vector<std::size_t> degree(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j && poset.le(pairs_[i].x, pairs_[j].y)) {
                    ++degree[i];
                    ++degree[j];
                }
        order_.resize(m);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    }

    bool solve() { return search(); }

    std::vector<PairList> partition() const {
        std::vector<PairList> out(d_);
        for (std::size_t i = 0; i < pairs_.size(); ++i) out[assigned_[i]].push_back(pairs_[i]);
        for (auto& part : out) std::sort(part.begin(), part.end());
        return out;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

    bool reversed_in(std::size_t b, const OrderedPair& p) const { return above_[b][p.y] & bit(p.x); }
    bool fits(std::size_t b, const OrderedPair& p) const { return !(above_[b][p.x] & bit(p.y)); }

    // Puts y below x in bucket b and closes transitively.
    void place(std::size_t b, const OrderedPair& p) {
        auto& above = above_[b];
        const std::uint64_t lifted = above[p.x] | bit(p.x);
        for (Element a = 0; a < n_; ++a)
            if (a == p.y || (above[a] & bit(p.y))) above[a] |= lifted;
    }

    bool search() {
        // Pairs already reversed by some used bucket go there for free;
        // doing so leaves every bucket unchanged.
        std::vector<std::size_t> free_assigned;
        std::size_t best = kNone;
        std::size_t best_options = kNone;
        for (std::size_t i : order_) {
            if (assigned_[i] != kNone) continue;
            const OrderedPair& p = pairs_[i];
            std::size_t options = used_ < d_ ? 1 : 0;
            bool placed = false;
            for (std::size_t b = 0; b < used_; ++b) {
                if (reversed_in(b, p)) {
                    assigned_[i] = b;
                    free_assigned.push_back(i);
                    placed = true;
                    break;
                }
                if (fits(b, p)) ++options;
            }
            if (placed) continue;
            if (options < best_options) {
                best_options = options;
                best = i;
            }
        }

        auto undo_free = [&] {
            for (std::size_t i : free_assigned) assigned_[i] = kNone;
        };
        if (best == kNone) return true;
        if (best_options == 0) {
            undo_free();
            return false;
        }

        const OrderedPair p = pairs_[best];
        for (std::size_t b = 0; b < used_; ++b) {
            if (!fits(b, p)) continue;
            if (branch(b, best)) return true;
        }
        // Empty buckets are interchangeable; only try the first.
        if (used_ < d_) {
            ++used_;
            if (branch(used_ - 1, best)) return true;
            --used_;
        }
        undo_free();
        return false;
    }

    bool branch(std::size_t b, std::size_t pair_index) {
        const std::vector<std::uint64_t> saved = above_[b];
        place(b, pairs_[pair_index]);
        assigned_[pair_index] = b;
        if (search()) return true;
        assigned_[pair_index] = kNone;
        above_[b] = saved;
        return false;
    }

    std::size_t n_;
    PairList pairs_;
    std::size_t d_;
    std::size_t used_ = 0;
    std::vector<std::size_t> assigned_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::uint64_t>> above_;
};

}  // namespace

DimensionCertificate exact_dimension(const Poset& poset, std::size_t d_max) {
    if (poset.size() > kExactDimensionMaxElements)
        throw std::invalid_argument("exact_dimension supports at most " +
                                    std::to_string(kExactDimensionMaxElements) + " elements");
    const PairList inc = incomparable_pairs(poset);

    DimensionCertificate cert;
    if (inc.empty()) {
        if (d_max < 1) throw DimensionNotFound(d_max);
        cert.dimension = 1;
        cert.partition.emplace_back();
        cert.extensions.push_back(any_linear_extension(poset));
        return cert;
    }

    for (std::size_t d = 2; d <= d_max; ++d) {
        PartitionSearch search(poset, inc, d);
        if (!search.solve()) continue;
        cert.dimension = d;
        cert.partition = search.partition();
        for (const auto& part : cert.partition)
            cert.extensions.push_back(reversing_extension(poset, part));
        return cert;
    }
    throw DimensionNotFound(d_max);
}

}  // namespace posetdim
