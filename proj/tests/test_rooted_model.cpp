#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "posetdim/generators.hpp"
#include "posetdim/rooted_model.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace posetdim;

namespace {

TreeDecomposition single_bag(std::size_t n) {
    TreeDecomposition td;
    td.vertex_count = n;
    td.bags.emplace_back();
    for (std::size_t v = 0; v < n; ++v) td.bags[0].push_back(v);
    return td;
}

// Random rooted tree on `nodes` nodes with parent(v) < v, so node 0 is root.
RootedSubtreeModel random_tree_model(std::mt19937_64& rng, std::size_t nodes) {
    std::vector<std::vector<Node>> children(nodes);
    for (Node v = 1; v < nodes; ++v) children[rng() % v].push_back(v);
    for (auto& ch : children) std::shuffle(ch.begin(), ch.end(), rng);
    std::vector<std::vector<Node>> subtrees(nodes);
    for (Node v = 0; v < nodes; ++v) subtrees[v] = {v};
    return RootedSubtreeModel::from_rooted_tree(std::move(children), 0, std::move(subtrees));
}

void check_model_invariants(const Graph& g, const TreeDecomposition& td, const RootedSubtreeModel& m) {
    std::size_t max_bag = 0;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, bag.size());
    CHECK(m.load_bound() <= max_bag);
    for (std::size_t u = 0; u < m.node_count(); ++u) CHECK(m.occupants(u).size() <= max_bag);

    std::vector<bool> root_used(m.node_count(), false);
    for (Element x = 0; x < m.element_count(); ++x) {
        const Node r = m.root_of(x);
        CHECK_FALSE(root_used[r]);
        root_used[r] = true;
        CHECK(m.contains(x, r));
        for (Node u : m.subtree(x)) {
            CHECK(oracle::is_ancestor_or_self(m, r, u));
            CHECK(m.l1_pos(r) <= m.l1_pos(u));
            CHECK(m.l2_pos(r) <= m.l2_pos(u));
            // Connected: the parent of every non-root node of T(x) is in T(x).
            if (u != r) CHECK(m.contains(x, m.parent(u)));
        }
    }

    const Graph h = m.intersection_graph();
    for (const auto& [u, v] : g.edges()) CHECK(h.has_edge(u, v));
    // H edges through roots: xy is an edge iff the deeper root lies in the
    // other subtree.
    for (Element x = 0; x < m.element_count(); ++x)
        for (Element y = 0; y < m.element_count(); ++y) {
            if (x == y) continue;
            const bool via_roots = (m.relation(m.root_of(x), m.root_of(y)) == NodeRelation::below &&
                                    m.contains(x, m.root_of(y))) ||
                                   (m.relation(m.root_of(y), m.root_of(x)) == NodeRelation::below &&
                                    m.contains(y, m.root_of(x)));
            CHECK(h.has_edge(x, y) == via_roots);
        }
}

}  // namespace

TEST_CASE("single bag expands into a chain") {
    const Poset c2 = chain(2);
    const RootedSubtreeModel m = build_model(cover_graph(c2), single_bag(2));
    REQUIRE(m.node_count() == 2);
    const Node u1 = m.root();
    REQUIRE(m.children(u1).size() == 1);
    const Node u2 = m.children(u1)[0];
    CHECK(m.root_of(0) == u1);
    CHECK(m.root_of(1) == u2);
    CHECK(m.subtree(0) == std::vector<Node>{u1, u2});
    CHECK(m.subtree(1) == std::vector<Node>{u2});
    CHECK(m.occupants(u1) == std::vector<Element>{0});
    CHECK(m.occupants(u2) == std::vector<Element>{0, 1});

    ModelOptions desc;
    desc.expansion = ExpansionOrder::descending;
    const RootedSubtreeModel d = build_model(cover_graph(c2), single_bag(2), desc);
    CHECK(d.root_of(1) == d.root());
}

TEST_CASE("path decomposition of a 3-chain") {
    const Poset c3 = chain(3);
    TreeDecomposition td;
    td.vertex_count = 3;
    td.bags = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    const RootedSubtreeModel m = build_model(cover_graph(c3), td);
    CHECK(m.node_count() == 3);
    CHECK(m.source(m.root_of(0)) == 0);
    CHECK(m.source(m.root_of(1)) == 0);
    CHECK(m.source(m.root_of(2)) == 1);
    const Graph h = m.intersection_graph();
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
}

TEST_CASE("bags with distinct roots are not expanded") {
    // Star 0-1, 0-2 with bags {0}, {0,1}, {0,2}: every bag roots exactly
    // one element, so no node is split.
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    TreeDecomposition td;
    td.vertex_count = 3;
    td.bags = {{0}, {0, 1}, {0, 2}};
    td.tree_edges = {{0, 1}, {0, 2}};
    const RootedSubtreeModel m = build_model(g, td);
    CHECK(m.node_count() == 3);
    CHECK(m.relation(m.root_of(1), m.root_of(2)) == NodeRelation::left_of);

    ModelOptions desc;
    desc.child_order = ChildOrder::descending;
    const RootedSubtreeModel r = build_model(g, td, desc);
    CHECK(r.relation(r.root_of(1), r.root_of(2)) == NodeRelation::right_of);

    ModelOptions other_root;
    other_root.root = 2;
    const RootedSubtreeModel o = build_model(g, td, other_root);
    CHECK(o.source(o.root()) == 2);
    CHECK_THROWS_AS(build_model(g, td, ModelOptions{5}), std::invalid_argument);
}

TEST_CASE("build_model rejects invalid decompositions") {
    const Poset c3 = chain(3);
    TreeDecomposition td;
    td.vertex_count = 3;
    td.bags = {{0, 1}, {2}};
    td.tree_edges = {{0, 1}};
    CHECK_THROWS_AS(build_model(cover_graph(c3), td), InvalidDecomposition);
}

TEST_CASE("node relations, meets and the two search orders") {
    // Root 0 with children 1, 2; node 3 under 1, node 4 under 2.
    const auto m = RootedSubtreeModel::from_rooted_tree({{1, 2}, {3}, {4}, {}, {}}, 0,
                                                        {{0}, {1}, {2}, {3}, {4}});
    for (Node v = 1; v < 5; ++v) CHECK(m.relation(0, v) == NodeRelation::below);
    CHECK(m.relation(1, 2) == NodeRelation::left_of);
    CHECK(m.relation(2, 1) == NodeRelation::right_of);
    CHECK(m.relation(3, 1) == NodeRelation::above);
    CHECK(m.relation(3, 3) == NodeRelation::equal);
    CHECK(m.meet(3, 4) == 0);
    CHECK(m.meet(3, 1) == 1);
    CHECK(m.meet(2, 2) == 2);
    CHECK(m.meet(0, 4) == 0);
    CHECK(std::string(to_string(NodeRelation::left_of)) == "left_of");

    std::ostringstream dump;
    m.dump(dump);
    CHECK(dump.str().find("node 0") != std::string::npos);
}

TEST_CASE("left-of between subtrees in sibling branches") {
    // Nodes are numbered 1..45 in left-to-right preorder; node k is index k-1.
    const std::vector<std::size_t> parent_label{
        0, 1, 2, 3, 3, 2, 6, 6, 1, 9, 10, 10, 9, 13, 14, 13, 9, 17, 18, 19, 18, 21, 17,
        1, 24, 25, 26, 27, 28, 27, 30, 30, 26, 33, 25, 35, 36, 35, 24, 39, 1, 41, 42, 41, 44};
    REQUIRE(parent_label.size() == 45);
    std::vector<std::vector<Node>> children(45);
    for (std::size_t label = 2; label <= 45; ++label)
        children[parent_label[label - 1] - 1].push_back(label - 1);
    std::vector<std::vector<Node>> subtrees{{17, 18, 20}, {25, 26, 27, 32}};
    const auto m = RootedSubtreeModel::from_rooted_tree(children, 0, subtrees);

    for (Node u = 0; u < 45; ++u) CHECK(m.l1_pos(u) == u);
    CHECK(m.root_of(0) == 17);
    CHECK(m.root_of(1) == 25);
    CHECK(m.relation(17, 25) == NodeRelation::left_of);
    CHECK(m.relation(25, 17) == NodeRelation::right_of);
    CHECK_FALSE(m.intersection_graph().has_edge(0, 1));
}

TEST_CASE("order equivalence and meets on random trees") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t nodes = 1 + rng() % 40;
        const auto m = random_tree_model(rng, nodes);
        for (int q = 0; q < 40; ++q) {
            const Node u = rng() % nodes, v = rng() % nodes, w = rng() % nodes;
            const bool below = oracle::is_ancestor_or_self(m, u, v) && u != v;
            CHECK((m.relation(u, v) == NodeRelation::below) == below);
            CHECK((m.l1_pos(u) < m.l1_pos(v) && m.l2_pos(u) < m.l2_pos(v)) == below);

            const Node uv = m.meet(u, v);
            CHECK(uv == m.meet(v, u));
            CHECK(m.meet(u, u) == u);
            CHECK(m.meet(uv, w) == m.meet(u, m.meet(v, w)));
            CHECK(m.depth(uv) <= std::min(m.depth(u), m.depth(v)));
            CHECK(oracle::is_ancestor_or_self(m, uv, u));
            CHECK(oracle::is_ancestor_or_self(m, uv, v));
            // Greatest common lower bound: no child of the meet lies below both.
            for (Node c : m.children(uv))
                CHECK_FALSE((oracle::is_ancestor_or_self(m, c, u) && oracle::is_ancestor_or_self(m, c, v)));

            // Exactly one of the four relations holds for distinct nodes.
            if (u != v) {
                const auto r = m.relation(u, v);
                const auto s = m.relation(v, u);
                CHECK(r != NodeRelation::equal);
                CHECK(((r == NodeRelation::below && s == NodeRelation::above) ||
                       (r == NodeRelation::above && s == NodeRelation::below) ||
                       (r == NodeRelation::left_of && s == NodeRelation::right_of) ||
                       (r == NodeRelation::right_of && s == NodeRelation::left_of)));
            }
        }
    }
}

TEST_CASE("model invariants over the corpus") {
    std::vector<testing::Instance> instances = testing::tree_instances(40, 30, 101);
    for (auto& inst : testing::kelly_instances(6)) instances.push_back(std::move(inst));
    for (auto& inst : testing::random_instances(40, 10, 103)) instances.push_back(std::move(inst));
    for (auto& inst : testing::loose_instances(40, 10, 107)) instances.push_back(std::move(inst));
    for (const auto& inst : instances) {
        INFO(inst.name);
        const Graph g = cover_graph(inst.poset);
        for (ChildOrder co : {ChildOrder::ascending, ChildOrder::descending})
            for (ExpansionOrder eo : {ExpansionOrder::ascending, ExpansionOrder::descending}) {
                ModelOptions options;
                options.child_order = co;
                options.expansion = eo;
                options.root = inst.td.node_count() - 1;
                check_model_invariants(g, inst.td, build_model(g, inst.td, options));
            }
    }
}
