#include "posetdim/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace posetdim {

using Mask = std::uint32_t;

namespace {

std::string list_text(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

[[noreturn]] void malformed(const std::string& what) {
    throw InvalidDecomposition(InvalidDecomposition::Kind::malformed_tree, {}, what);
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    return adj;
}

std::vector<std::size_t> members(Mask m) {
    std::vector<std::size_t> out;
    for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

void require_small(const Graph& g, std::size_t limit) {
    if (g.size() > limit) throw TooLarge(g.size(), limit);
}

TreeDecomposition single_empty_bag() {
    TreeDecomposition td;
    td.bags.emplace_back();
    return td;
}

}  // namespace

InvalidDecomposition::InvalidDecomposition(Kind kind, std::vector<std::size_t> witness,
                                           const std::string& what)
    : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

TooLarge::TooLarge(std::size_t n, std::size_t limit)
    : std::invalid_argument("graph has " + std::to_string(n) + " vertices; exact oracle limit is " +
                            std::to_string(limit)),
      n_(n) {}

std::vector<std::vector<std::size_t>> TreeDecomposition::tree_adjacency() const {
    std::vector<std::vector<std::size_t>> adj(bags.size());
    for (const auto& [i, j] : tree_edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

void TreeDecomposition::normalize() {
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    for (auto& e : tree_edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(tree_edges.begin(), tree_edges.end());
}

WidthReport validate_td(const Graph& graph, const TreeDecomposition& td) {
    const std::size_t n = graph.size();
    const std::size_t nodes = td.node_count();
    if (td.vertex_count != n)
        malformed("decomposition is over " + std::to_string(td.vertex_count) +
                  " vertices, graph has " + std::to_string(n));
    if (nodes == 0) malformed("decomposition has no bags");
    if (td.tree_edges.size() != nodes - 1) malformed("tree must have exactly #bags-1 edges");
    for (const auto& e : td.tree_edges)
        if (e.u >= nodes || e.v >= nodes || e.u == e.v) malformed("bad tree edge");

    const auto tree = td.tree_adjacency();
    {
        std::vector<bool> seen(nodes, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : tree[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != nodes) malformed("decomposition tree is not connected");
    }

    std::vector<std::vector<std::size_t>> nodes_of(n);
    std::size_t max_bag = 0;
    for (std::size_t b = 0; b < nodes; ++b) {
        max_bag = std::max(max_bag, td.bags[b].size());
        for (std::size_t v : td.bags[b]) {
            if (v >= n) malformed("bag " + std::to_string(b) + " names vertex out of range");
            nodes_of[v].push_back(b);
        }
    }
    for (auto& list : nodes_of) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    for (std::size_t v = 0; v < n; ++v)
        if (nodes_of[v].empty())
            throw InvalidDecomposition(InvalidDecomposition::Kind::uncovered_vertex, {v},
                                       "vertex " + std::to_string(v) + " is in no bag");

    for (const auto& [u, v] : graph.edges()) {
        std::vector<std::size_t> common;
        std::set_intersection(nodes_of[u].begin(), nodes_of[u].end(), nodes_of[v].begin(),
                              nodes_of[v].end(), std::back_inserter(common));
        if (common.empty())
            throw InvalidDecomposition(InvalidDecomposition::Kind::uncovered_edge, {u, v},
                                       "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} is in no bag");
    }

    std::vector<char> in_trace(nodes, 0);
    std::vector<char> seen(nodes, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& list = nodes_of[v];
        for (std::size_t b : list) in_trace[b] = 1, seen[b] = 0;
        std::vector<std::size_t> stack{list.front()};
        seen[list.front()] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : tree[u])
                if (in_trace[w] && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != list.size()) {
            std::size_t stray = *std::find_if(list.begin(), list.end(),
                                              [&](std::size_t b) { return !seen[b]; });
            std::vector<std::size_t> witness{v, list.front(), stray};
            throw InvalidDecomposition(InvalidDecomposition::Kind::disconnected_trace, witness,
                                       "bags containing vertex " + std::to_string(v) +
                                           " are not connected (nodes " +
                                           list_text({list.front(), stray}) + ")");
        }
        for (std::size_t b : list) in_trace[b] = 0;
    }

    WidthReport report;
    report.width = max_bag == 0 ? 0 : max_bag - 1;
    report.node_count = nodes;
    report.is_path = std::all_of(tree.begin(), tree.end(),
                                 [](const auto& nbrs) { return nbrs.size() <= 2; });
    return report;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& graph,
                                                        std::span<const std::size_t> order) {
    const std::size_t n = graph.size();
    if (order.size() != n) throw std::invalid_argument("elimination order has wrong length");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || pos[order[i]] != n)
            throw std::invalid_argument("elimination order is not a permutation");
        pos[order[i]] = i;
    }
    if (n == 0) return single_empty_bag();

    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& [u, v] : graph.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    TreeDecomposition td;
    td.vertex_count = n;
    td.bags.resize(n);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = order[i];
        const std::vector<std::size_t> nbrs(adj[v].begin(), adj[v].end());
        td.bags[i] = nbrs;
        td.bags[i].push_back(v);
        std::size_t parent = n;
        for (std::size_t w : nbrs) {
            adj[w].erase(v);
            for (std::size_t x : nbrs)
                if (x != w) adj[w].insert(x);
            if (parent == n || pos[w] < pos[parent]) parent = w;
        }
        if (parent == n)
            roots.push_back(i);
        else
            td.tree_edges.push_back({i, pos[parent]});
    }
    for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.push_back({roots[i - 1], roots[i]});
    td.normalize();
    return td;
}

WidthResult exact_treewidth_small(const Graph& graph) {
    require_small(graph, kExactTreewidthLimit);
    const std::size_t n = graph.size();
    if (n == 0) return {0, single_empty_bag()};
    const std::vector<Mask> adj = adjacency_masks(graph);

    // Vertices outside prefix+{v} reachable from v through the prefix: the
    // neighbourhood of v at the moment it is eliminated after `prefix`.
    auto q_size = [&](Mask prefix, std::size_t v) {
        Mask comp = 0;
        Mask frontier = adj[v] & prefix;
        while (frontier) {
            Mask u = frontier & (~frontier + 1);
            comp |= u;
            frontier &= ~u;
            frontier |= adj[std::countr_zero(u)] & prefix & ~comp;
        }
        Mask reach = adj[v];
        for (Mask m = comp; m; m &= m - 1) reach |= adj[std::countr_zero(m)];
        reach &= ~(prefix | (Mask{1} << v));
        return static_cast<std::size_t>(std::popcount(reach));
    };

    const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
    std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
    std::vector<std::uint8_t> last(std::size_t{full} + 1, 0);
    for (Mask s = 1; s <= full && s != 0; ++s) {
        std::size_t value = std::numeric_limits<std::size_t>::max();
        for (Mask m = s; m; m &= m - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(m));
            const Mask rest = s & ~(Mask{1} << v);
            const std::size_t cand = std::max<std::size_t>(best[rest], q_size(rest, v));
            if (cand < value) {
                value = cand;
                last[s] = static_cast<std::uint8_t>(v);
            }
        }
        best[s] = static_cast<std::uint8_t>(value);
    }

    std::vector<std::size_t> order(n);
    Mask s = full;
    for (std::size_t i = n; i-- > 0;) {
        order[i] = last[s];
        s &= ~(Mask{1} << last[s]);
    }
    return {best[full], decomposition_from_elimination_order(graph, order)};
}

WidthResult exact_pathwidth_small(const Graph& graph) {
    require_small(graph, kExactPathwidthLimit);
    const std::size_t n = graph.size();
    if (n == 0) return {0, single_empty_bag()};
    const std::vector<Mask> adj = adjacency_masks(graph);
    const Mask full = (Mask{1} << n) - 1;

    // Vertices of the prefix with a neighbour outside it.
    auto boundary = [&](Mask prefix) {
        Mask out = 0;
        for (Mask m = prefix; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (adj[v] & ~prefix) out |= Mask{1} << v;
        }
        return out;
    };

    std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
    std::vector<std::uint8_t> last(std::size_t{full} + 1, 0);
    std::vector<std::uint8_t> bsize(std::size_t{full} + 1, 0);
    for (Mask s = 0; s <= full; ++s) bsize[s] = static_cast<std::uint8_t>(std::popcount(boundary(s)));
    for (Mask s = 1; s <= full; ++s) {
        std::size_t value = std::numeric_limits<std::size_t>::max();
        for (Mask m = s; m; m &= m - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(m));
            const Mask rest = s & ~(Mask{1} << v);
            const std::size_t cand = std::max<std::size_t>(best[rest], bsize[rest]);
            if (cand < value) {
                value = cand;
                last[s] = static_cast<std::uint8_t>(v);
            }
        }
        best[s] = static_cast<std::uint8_t>(value);
    }

    std::vector<std::size_t> order(n);
    Mask s = full;
    for (std::size_t i = n; i-- > 0;) {
        order[i] = last[s];
        s &= ~(Mask{1} << last[s]);
    }

    TreeDecomposition td;
    td.vertex_count = n;
    Mask prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
        td.bags.push_back(members(boundary(prefix) | (Mask{1} << order[i])));
        if (i > 0) td.tree_edges.push_back({i - 1, i});
        prefix |= Mask{1} << order[i];
    }
    td.normalize();
    return {best[full], std::move(td)};
}

bool is_treewidth_at_most_2(const Graph& graph) {
    const std::size_t n = graph.size();
    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& [u, v] : graph.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    std::deque<std::size_t> work;
    for (std::size_t v = 0; v < n; ++v) work.push_back(v);
    std::size_t remaining = n;

    while (!work.empty()) {
        const std::size_t v = work.front();
        work.pop_front();
        if (gone[v] || adj[v].size() > 2) continue;
        std::vector<std::size_t> nbrs(adj[v].begin(), adj[v].end());
        for (std::size_t w : nbrs) adj[w].erase(v);
        adj[v].clear();
        gone[v] = true;
        --remaining;
        if (nbrs.size() == 2) {
            adj[nbrs[0]].insert(nbrs[1]);
            adj[nbrs[1]].insert(nbrs[0]);
        }
        for (std::size_t w : nbrs) work.push_back(w);
    }
    return remaining == 0;
}

TreeDecomposition forest_decomposition(const Graph& forest) {
    const std::size_t n = forest.size();
    if (n == 0) return single_empty_bag();
    TreeDecomposition td;
    td.vertex_count = n;
    td.bags.resize(n);
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> roots;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        roots.push_back(s);
        seen[s] = true;
        td.bags[s] = {s};
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w : forest.neighbors(u)) {
                if (w == parent[u]) continue;
                if (seen[w]) throw std::invalid_argument("graph is not a forest");
                seen[w] = true;
                parent[w] = u;
                td.bags[w] = {w, u};
                td.tree_edges.push_back({u, w});
                queue.push_back(w);
            }
        }
    }
    for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.push_back({roots[i - 1], roots[i]});
    td.normalize();
    return td;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == 'c') continue;
        return true;
    }
    return false;
}

std::size_t one_based(long long id, std::size_t limit, std::size_t lineno) {
    if (id < 1 || static_cast<std::size_t>(id) > limit) throw ParseError(lineno, "id out of range");
    return static_cast<std::size_t>(id - 1);
}

void expect_end(std::istringstream& fields, std::size_t lineno) {
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "trailing fields");
}

}  // namespace

Graph read_graph_gr(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing header `p tw n m`");
    std::istringstream header(line);
    std::string p, tw;
    std::size_t n = 0, m = 0;
    if (!(header >> p >> tw >> n >> m) || p != "p" || tw != "tw")
        throw ParseError(lineno, "expected header `p tw <n> <m>`");
    expect_end(header, lineno);

    Graph g(n);
    std::size_t read = 0;
    while (next_content_line(in, line, lineno)) {
        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u >> v)) throw ParseError(lineno, "expected `<u> <v>`");
        expect_end(fields, lineno);
        const std::size_t a = one_based(u, n, lineno);
        const std::size_t b = one_based(v, n, lineno);
        if (a == b) throw ParseError(lineno, "self-loop");
        if (!g.add_edge(a, b)) throw ParseError(lineno, "duplicate edge");
        ++read;
    }
    if (read != m) throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                                std::to_string(read));
    return g;
}

void write_graph_gr(std::ostream& out, const Graph& graph) {
    out << "p tw " << graph.size() << ' ' << graph.edge_count() << '\n';
    for (const auto& [u, v] : graph.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition read_td(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing header `s td`");
    std::istringstream header(line);
    std::string s, tdtag;
    std::size_t bag_count = 0, max_bag = 0, n = 0;
    if (!(header >> s >> tdtag >> bag_count >> max_bag >> n) || s != "s" || tdtag != "td")
        throw ParseError(lineno, "expected header `s td <bags> <width+1> <n>`");
    expect_end(header, lineno);

    TreeDecomposition td;
    td.vertex_count = n;
    td.bags.resize(bag_count);
    std::vector<bool> defined(bag_count, false);
    std::size_t seen_max = 0;
    while (next_content_line(in, line, lineno)) {
        std::istringstream fields(line);
        if (line[line.find_first_not_of(" \t")] == 'b') {
            std::string b;
            long long id = 0;
            if (!(fields >> b >> id) || b != "b") throw ParseError(lineno, "expected `b <id> ...`");
            const std::size_t node = one_based(id, bag_count, lineno);
            if (defined[node]) throw ParseError(lineno, "bag defined twice");
            defined[node] = true;
            long long v = 0;
            while (fields >> v) td.bags[node].push_back(one_based(v, n, lineno));
            if (!fields.eof()) throw ParseError(lineno, "bad vertex id");
            seen_max = std::max(seen_max, td.bags[node].size());
        } else {
            long long i = 0, j = 0;
            if (!(fields >> i >> j)) throw ParseError(lineno, "expected tree edge `<i> <j>`");
            expect_end(fields, lineno);
            td.tree_edges.push_back({one_based(i, bag_count, lineno), one_based(j, bag_count, lineno)});
        }
    }
    if (std::find(defined.begin(), defined.end(), false) != defined.end())
        throw ParseError(lineno, "some bag is never defined");
    if (seen_max != max_bag)
        throw ParseError(lineno, "header announces bag size " + std::to_string(max_bag) +
                                     ", largest bag has " + std::to_string(seen_max));
    td.normalize();
    return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
    std::size_t max_bag = 0;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, bag.size());
    out << "s td " << td.bags.size() << ' ' << max_bag << ' ' << td.vertex_count << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b + 1;
        for (std::size_t v : td.bags[b]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [i, j] : td.tree_edges) out << i + 1 << ' ' << j + 1 << '\n';
}

}  // namespace posetdim
