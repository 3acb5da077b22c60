#include <doctest.h>

#include <cmath>
#include <random>

#include "posetdim/generators.hpp"
#include "posetdim/realizer.hpp"
#include "support/corpus.hpp"
#include "support/lemmas.hpp"
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

using Dist = std::vector<std::pair<Element, std::size_t>>;

}  // namespace

TEST_CASE("reach sets of the two-element chain model") {
    // Single bag {0,1}: r(0) = u1, r(1) = u2, T(0) = {u1,u2}, T(1) = {u2}.
    const auto m = build_model(cover_graph(chain(2)), single_bag(2));
    CHECK(reach_set(m, 1, 1).dist == Dist{{0, 1}, {1, 0}});
    CHECK(reach_set(m, 1, 0).dist == Dist{{1, 0}});
    for (std::size_t k = 0; k < 4; ++k) CHECK(reach_set(m, 0, k).dist == Dist{{0, 0}});

    const ReachSet r = reach_set(m, 1, 3);
    CHECK(r.distance(0) == std::optional<std::size_t>{1});
    CHECK(r.reaches(0, 1));
    CHECK_FALSE(r.reaches(0, 0));
}

TEST_CASE("reach sets agree with enumerated sequences") {
    auto instances = testing::random_instances(30, 6, 211);
    for (auto& inst : testing::loose_instances(30, 6, 223)) instances.push_back(std::move(inst));
    for (const auto& inst : instances) {
        const auto m = build_model(cover_graph(inst.poset), inst.td);
        const std::size_t horizon = 3;
        for (Element x = 0; x < inst.poset.size(); ++x) {
            const ReachSet r = reach_set(m, x, horizon);
            for (Element z = 0; z < inst.poset.size(); ++z)
                CHECK(r.distance(z) == oracle::reach_distance_by_sequences(m, x, z, horizon));
        }
    }
}

TEST_CASE("low_point") {
    const Poset c2 = chain(2);
    const auto m = build_model(cover_graph(c2), single_bag(2));
    const ReachIndex reach(m, 2);
    CHECK(low_point(c2, reach, 2, 0, 0) == 0);
    CHECK(low_point(c2, reach, 2, 1, 1) == 1);
    // Element 0 reaches only itself; r(1) lies in T(0), so 1 reaches 0 in
    // one step. The low point is therefore 0, the element with the
    // shallower root.
    CHECK(low_point(c2, reach, 2, 0, 1) == 0);
    CHECK_THROWS_AS(low_point(c2, reach, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("phi and tau on small models") {
    {
        const Poset a2 = antichain(2);
        const auto m = build_model(cover_graph(a2), single_bag(2));
        const ReachIndex reach(m, 0);
        const PhiColoring phi = phi_coloring(m, reach);
        CHECK(phi.color == std::vector<std::size_t>{1, 1});
        const TauColoring tau = tau_coloring(a2, phi, reach);
        const TauColor expected{{1, 1, PairRelation::eq}};
        CHECK(tau.tau[0] == expected);
        CHECK(tau.tau[1] == expected);
        CHECK(tau.class_count == 1);
    }
    {
        const Poset c2 = chain(2);
        const auto m = build_model(cover_graph(c2), single_bag(2));
        const ReachIndex reach(m, 2);
        const PhiColoring phi = phi_coloring(m, reach);
        CHECK(phi.color == std::vector<std::size_t>{1, 2});
        CHECK(phi.color_count() == 2);
        const TauColoring tau = tau_coloring(c2, phi, reach);
        CHECK(tau.tau[0] == TauColor{{1, 1, PairRelation::eq}});
        CHECK(tau.tau[1] == TauColor{{2, 1, PairRelation::gt}, {2, 2, PairRelation::eq}});
        CHECK(tau.class_count == 2);
    }
}

TEST_CASE("phi uses at most 2h-1 colours on tree posets") {
    for (const auto& inst : testing::tree_instances(60, 30, 307)) {
        const auto m = build_model(cover_graph(inst.poset), inst.td);
        const std::size_t h = height(inst.poset);
        const ReachIndex reach(m, 2 * h - 2);
        CHECK(phi_coloring(m, reach).color_count() <= 2 * h - 1);
    }
}

TEST_CASE("signature cases") {
    {
        const Poset a2 = antichain(2);
        const auto m = build_model(cover_graph(a2), single_bag(2));
        const ReachIndex reach(m, 0);
        const TauColoring tau = tau_coloring(a2, phi_coloring(m, reach), reach);
        CHECK(signature_case(a2, m, tau, {0, 1}) == 1);
        CHECK(signature_case(a2, m, tau, {1, 0}) == 2);
        const auto classes = partition_by_signature(a2, m);
        CHECK(classes.size() == 2);
        for (const auto& [sig, pairs] : classes) CHECK(pairs.size() == 1);
        CHECK_THROWS_AS(signature_case(chain(2), m, tau, {0, 1}), InvalidPair);
    }
    {
        // Empty root bag with two leaf bags {0} and {1}.
        const Poset a2 = antichain(2);
        TreeDecomposition td;
        td.vertex_count = 2;
        td.bags = {{}, {0}, {1}};
        td.tree_edges = {{0, 1}, {0, 2}};
        const auto m = build_model(cover_graph(a2), td);
        const ReachIndex reach(m, 0);
        const TauColoring tau = tau_coloring(a2, phi_coloring(m, reach), reach);
        CHECK(signature_case(a2, m, tau, {0, 1}) == 3);
        CHECK(signature_case(a2, m, tau, {1, 0}) == 5);
    }
    CHECK(partition_by_signature(chain(4), build_model(cover_graph(chain(4)), single_bag(4))).empty());
}

TEST_CASE("signature cases match their definitions over the corpus") {
    auto instances = testing::random_instances(40, 9, 401);
    for (auto& inst : testing::kelly_instances(5)) instances.push_back(std::move(inst));
    for (const auto& inst : instances) {
        const Poset& p = inst.poset;
        const auto m = build_model(cover_graph(p), inst.td);
        const std::size_t h = height(p);
        const ReachIndex reach(m, 2 * h - 2);
        const TauColoring tau = tau_coloring(p, phi_coloring(m, reach), reach);
        for (const auto& [x, y] : incomparable_pairs(p)) {
            const Node rx = m.root_of(x), ry = m.root_of(y);
            const bool x_left = m.l1_pos(rx) < m.l1_pos(ry) && m.l2_pos(ry) < m.l2_pos(rx);
            const bool y_left = m.l1_pos(ry) < m.l1_pos(rx) && m.l2_pos(rx) < m.l2_pos(ry);
            // Is there y' with the colour of y, x <= y' and r(y') not left of r(y)?
            bool exists_y = false, exists_x = false;
            for (Element w = 0; w < p.size(); ++w) {
                const Node rw = m.root_of(w);
                if (tau.tau[w] == tau.tau[y] && p.le(x, w) &&
                    !(m.l1_pos(rw) < m.l1_pos(ry) && m.l2_pos(ry) < m.l2_pos(rw)))
                    exists_y = true;
                if (tau.tau[w] == tau.tau[x] && p.le(w, y) &&
                    !(m.l1_pos(rw) < m.l1_pos(rx) && m.l2_pos(rx) < m.l2_pos(rw)))
                    exists_x = true;
            }
            int expected = 0;
            if (oracle::is_ancestor_or_self(m, rx, ry))
                expected = 1;
            else if (oracle::is_ancestor_or_self(m, ry, rx))
                expected = 2;
            else if (x_left)
                expected = exists_y ? 4 : 3;
            else if (y_left)
                expected = exists_x ? 6 : 5;
            CHECK(signature_case(p, m, tau, {x, y}) == expected);
        }
    }
}

TEST_CASE("build_realizer on small families") {
    {
        const Poset c5 = chain(5);
        const auto c = build_realizer(c5, forest_decomposition(cover_graph(c5)));
        CHECK(c.realizer.size() == 1);
        CHECK(c.report.verified);
        CHECK(c.report.t == 1);
        CHECK(c.report.h == 5);
    }
    {
        const Poset a2 = antichain(2);
        const auto c = build_realizer(a2, single_bag(2));
        REQUIRE(c.realizer.size() == 2);
        std::vector<std::vector<Element>> orders;
        for (const auto& e : c.realizer.extensions) orders.push_back(e.order);
        std::sort(orders.begin(), orders.end());
        CHECK(orders == std::vector<std::vector<Element>>{{0, 1}, {1, 0}});
        CHECK(c.report.verified);
    }
    {
        const Poset s3 = standard_example(3);
        const Graph g = cover_graph(s3);
        const auto c = build_realizer(s3, exact_treewidth_small(g).decomposition);
        CHECK(c.report.verified);
        CHECK(c.realizer.size() >= exact_dimension(s3).dimension);
        CHECK(c.report.classes_reversible);
        CHECK(c.report.phi_bound_ok);
        CHECK(c.report.signature_bound_ok);
    }
    {
        const Poset k = kelly(4);
        const auto c = build_realizer(k, kelly_path_decomposition(4));
        CHECK(c.report.verified);
        CHECK(c.report.t == 3);
        CHECK(c.report.h == height(k));
    }
    TreeDecomposition bad;
    bad.vertex_count = 3;
    bad.bags = {{0, 1}};
    CHECK_THROWS_AS(build_realizer(chain(3), bad), InvalidDecomposition);
}

TEST_CASE("build_realizer over loose decompositions and all model options") {
    for (const auto& inst : testing::loose_instances(40, 9, 503)) {
        INFO(inst.name);
        for (ChildOrder co : {ChildOrder::ascending, ChildOrder::descending})
            for (ExpansionOrder eo : {ExpansionOrder::ascending, ExpansionOrder::descending}) {
                ModelOptions options;
                options.child_order = co;
                options.expansion = eo;
                options.root = inst.td.node_count() / 2;
                const auto c = build_realizer(inst.poset, inst.td, options);
                CHECK(c.report.verified);
                CHECK(verify_realizer(inst.poset, c.realizer.extensions));
                std::size_t total = 0;
                for (const auto& [sig, pairs] : c.classes) total += pairs.size();
                CHECK(total == incomparable_pairs(inst.poset).size());
            }
    }
}

TEST_CASE("reach and colouring properties on a mixed corpus") {
    auto instances = testing::tree_instances(30, 25, 601);
    for (auto& inst : testing::kelly_instances(6)) instances.push_back(std::move(inst));
    for (auto& inst : testing::random_instances(30, 10, 607)) instances.push_back(std::move(inst));
    for (auto& inst : testing::loose_instances(30, 10, 613)) instances.push_back(std::move(inst));
    std::mt19937_64 rng(617);
    testing::LemmaTally tally;
    for (const auto& inst : instances)
        testing::check_lemmas(inst.poset, build_model(cover_graph(inst.poset), inst.td), 8, rng, tally);
    for (const auto& [name, e] : tally.entries) {
        INFO(name << ": " << e.first_failure);
        CHECK(e.failures == 0);
        CHECK(e.checks >= 500);
    }
}

TEST_CASE("theoretical bound") {
    const double log6 = std::log2(6.0);
    CHECK(theoretical_bound_log2(1, 1) == doctest::Approx(log6 + 8).epsilon(1e-12));
    CHECK(theoretical_bound_log2(1, 2) == doctest::Approx(log6 + 8).epsilon(1e-12));
    CHECK(theoretical_bound_log2(2, 2) == doctest::Approx(log6 + 512).epsilon(1e-12));
    CHECK(theoretical_bound_log2(3, 1) == doctest::Approx(log6 + 72).epsilon(1e-12));
    CHECK_THROWS_AS(theoretical_bound_log2(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_bound_log2(1000, 100), std::overflow_error);

    CHECK(geometric_sum(1, 4) == 5);
    CHECK(geometric_sum(2, 3) == 15);
    CHECK(geometric_sum(3, 0) == 1);
    CHECK(geometric_sum(0, 5) == 1);
    CHECK(geometric_sum(10, 40) == UINT64_MAX);
}
