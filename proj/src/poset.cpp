#include "posetdim/poset.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace posetdim {

namespace {

std::string describe_cycle(const std::vector<Element>& cycle) {
    std::ostringstream os;
    os << "relations contain a cycle:";
    for (Element x : cycle) os << ' ' << x;
    if (!cycle.empty()) os << ' ' << cycle.front();
    return os.str();
}

// Iterative DFS over the relation digraph. Returns a reverse topological
// order, or throws with a cycle witness.
std::vector<Element> reverse_topological_order(const std::vector<std::vector<Element>>& succ) {
    const std::size_t n = succ.size();
    enum : unsigned char { white, grey, black };
    std::vector<unsigned char> color(n, white);
    std::vector<Element> parent(n, n);
    std::vector<Element> finished;
    finished.reserve(n);
    std::vector<std::pair<Element, std::size_t>> stack;

    for (Element s = 0; s < n; ++s) {
        if (color[s] != white) continue;
        color[s] = grey;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == succ[v].size()) {
                color[v] = black;
                finished.push_back(v);
                stack.pop_back();
                continue;
            }
            Element w = succ[v][next++];
            if (color[w] == white) {
                color[w] = grey;
                parent[w] = v;
                stack.emplace_back(w, 0);
            } else if (color[w] == grey) {
                std::vector<Element> cycle;
                for (Element u = v; u != w; u = parent[u]) cycle.push_back(u);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                throw CycleError(std::move(cycle));
            }
        }
    }
    return finished;
}

}  // namespace

CycleError::CycleError(std::vector<Element> cycle)
    : std::runtime_error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Poset Poset::from_relations(std::size_t n, std::span<const OrderedPair> pairs) {
    std::vector<std::vector<Element>> succ(n);
    for (const auto& [x, y] : pairs) {
        if (x >= n || y >= n) throw std::out_of_range("relation endpoint out of range");
        if (x == y) throw CycleError({x});
        succ[x].push_back(y);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    Poset p;
    p.up_.assign(n, Bits(n));
    p.down_.assign(n, Bits(n));
    // Successors finish before their predecessors, so each row is complete
    // by the time it is OR-ed into a lower one.
    for (Element x : reverse_topological_order(succ)) {
        for (Element y : succ[x]) {
            p.up_[x].set(y);
            p.up_[x] |= p.up_[y];
        }
    }
    for (Element x = 0; x < n; ++x)
        for (auto y = p.up_[x].find_first(); y != Bits::npos; y = p.up_[x].find_next(y))
            p.down_[y].set(x);
    return p;
}

std::size_t Poset::relation_count() const {
    std::size_t total = 0;
    for (const auto& row : up_) total += row.count();
    return total;
}

Poset Poset::induced(std::span<const Element> elements) const {
    PairList pairs;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (lt(elements[i], elements[j])) pairs.push_back({i, j});
    return from_relations(elements.size(), pairs);
}

Poset Poset::relabeled(std::span<const Element> perm) const {
    if (perm.size() != size()) throw std::invalid_argument("relabeling has wrong size");
    PairList pairs;
    for (Element x = 0; x < size(); ++x)
        for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y))
            pairs.push_back({perm[x], perm[y]});
    return from_relations(size(), pairs);
}

void Poset::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != size())
        throw std::invalid_argument("label table has wrong size");
    labels_ = std::move(labels);
}

std::string Poset::label(Element x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

bool Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("graph loops are not allowed");
    if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

std::vector<std::size_t> LinearExtension::positions() const {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    return pos;
}

Poset poset_from_relations(std::size_t n, std::span<const OrderedPair> pairs) {
    return Poset::from_relations(n, pairs);
}

PairList cover_relations(const Poset& poset) {
    PairList covers;
    for (Element x = 0; x < poset.size(); ++x) {
        const Bits& up = poset.up_set(x);
        for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y))
            if (!up.intersects(poset.down_set(y))) covers.push_back({x, y});
    }
    return covers;
}

Graph cover_graph(const Poset& poset) {
    Graph g(poset.size());
    for (const auto& [x, y] : cover_relations(poset)) g.add_edge(x, y);
    return g;
}

std::size_t height(const Poset& poset) {
    const LinearExtension ext = any_linear_extension(poset);
    std::vector<std::size_t> rank(poset.size(), 1);
    std::size_t best = 0;
    for (Element x : ext.order) {
        const Bits& down = poset.down_set(x);
        for (auto z = down.find_first(); z != Bits::npos; z = down.find_next(z))
            rank[x] = std::max(rank[x], rank[z] + 1);
        best = std::max(best, rank[x]);
    }
    return best;
}

PairList incomparable_pairs(const Poset& poset) {
    PairList out;
    for (Element x = 0; x < poset.size(); ++x)
        for (Element y = 0; y < poset.size(); ++y)
            if (x != y && poset.incomparable(x, y)) out.push_back({x, y});
    return out;
}

bool is_linear_extension(const Poset& poset, const LinearExtension& ext) {
    const std::size_t n = poset.size();
    if (ext.order.size() != n) return false;
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ext.order[i] >= n || pos[ext.order[i]] != n) return false;
        pos[ext.order[i]] = i;
    }
    for (Element x = 0; x < n; ++x) {
        const Bits& up = poset.up_set(x);
        for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y))
            if (pos[x] > pos[y]) return false;
    }
    return true;
}

bool verify_realizer(const Poset& poset, std::span<const LinearExtension> extensions) {
    if (extensions.empty()) return false;
    std::vector<std::vector<std::size_t>> pos;
    for (const auto& ext : extensions) {
        if (!is_linear_extension(poset, ext)) return false;
        pos.push_back(ext.positions());
    }
    for (const auto& [x, y] : incomparable_pairs(poset)) {
        bool reversed = std::any_of(pos.begin(), pos.end(),
                                    [&](const auto& p) { return p[y] < p[x]; });
        if (!reversed) return false;
    }
    return true;
}

LinearExtension any_linear_extension(const Poset& poset) {
    LinearExtension ext;
    ext.order.resize(poset.size());
    std::iota(ext.order.begin(), ext.order.end(), Element{0});
    // x < y implies down(x) is a proper subset of down(y).
    std::stable_sort(ext.order.begin(), ext.order.end(), [&](Element a, Element b) {
        return poset.down_set(a).count() < poset.down_set(b).count();
    });
    return ext;
}

std::vector<Element> interval(const Poset& poset, Element x, Element y) {
    std::vector<Element> out;
    if (!poset.le(x, y)) return out;
    for (Element z = 0; z < poset.size(); ++z)
        if (poset.le(x, z) && poset.le(z, y)) out.push_back(z);
    return out;
}

namespace {

// Strips a comment and reports whether anything but whitespace remains.
bool content_line(std::string& line, char comment) {
    if (auto pos = line.find(comment); pos != std::string::npos) line.erase(pos);
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

}  // namespace

Poset read_poset(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0;
    PairList pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line, '#')) continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string tag;
            if (!(fields >> tag >> n) || tag != "p")
                throw ParseError(lineno, "expected header `p <n>`");
            have_header = true;
        } else {
            long long x = 0, y = 0;
            if (!(fields >> x >> y)) throw ParseError(lineno, "expected `<x> <y>`");
            if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n ||
                static_cast<std::size_t>(y) >= n)
                throw ParseError(lineno, "element id out of range");
            pairs.push_back({static_cast<Element>(x), static_cast<Element>(y)});
        }
        std::string extra;
        if (fields >> extra) throw ParseError(lineno, "trailing fields");
    }
    if (!have_header) throw ParseError(lineno, "missing header `p <n>`");
    return Poset::from_relations(n, pairs);
}

void write_poset(std::ostream& out, const Poset& poset) {
    out << "p " << poset.size() << '\n';
    for (const auto& [x, y] : cover_relations(poset)) out << x << ' ' << y << '\n';
}

}  // namespace posetdim
