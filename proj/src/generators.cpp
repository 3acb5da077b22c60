#include "posetdim/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace posetdim {

namespace {

// Distribution helpers over the raw engine output, so generated posets do
// not depend on the standard library's distribution implementations.
double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

std::vector<Element> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
    return perm;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw BadParameter(what);
}

}  // namespace

Family parse_family(const std::string& name) {
    if (name == "standard") return Family::standard;
    if (name == "kelly") return Family::kelly;
    if (name == "grid") return Family::grid;
    if (name == "chain") return Family::chain;
    if (name == "antichain") return Family::antichain;
    if (name == "random") return Family::random;
    if (name == "tree") return Family::tree;
    throw BadParameter("unknown family '" + name + "'");
}

const char* to_string(Family family) {
    switch (family) {
        case Family::standard: return "standard";
        case Family::kelly: return "kelly";
        case Family::grid: return "grid";
        case Family::chain: return "chain";
        case Family::antichain: return "antichain";
        case Family::random: return "random";
        case Family::tree: return "tree";
    }
    return "?";
}

Poset standard_example(std::size_t d) {
    require(d >= 2, "standard example needs d >= 2");
    PairList pairs;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) pairs.push_back({i, d + j});
    Poset p = Poset::from_relations(2 * d, pairs);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= d; ++i) labels.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= d; ++i) labels.push_back("b" + std::to_string(i));
    p.set_labels(std::move(labels));
    return p;
}

Poset kelly(std::size_t d) {
    require(d >= 3, "Kelly's construction needs d >= 3");
    // 1-based indices, a_1..a_d etc.
    auto a = [&](std::size_t i) { return i - 1; };
    auto b = [&](std::size_t i) { return d + i - 1; };
    auto z = [&](std::size_t i) { return 2 * d + i - 1; };
    auto w = [&](std::size_t i) { return 3 * d - 1 + i - 1; };

    PairList pairs;
    for (std::size_t i = 1; i + 1 <= d - 1; ++i) {
        pairs.push_back({z(i), z(i + 1)});
        pairs.push_back({w(i + 1), w(i)});
    }
    for (std::size_t i = 1; i <= d - 1; ++i) {
        pairs.push_back({a(i), z(i)});
        pairs.push_back({z(i), b(i + 1)});
        pairs.push_back({w(i), b(i)});
    }
    for (std::size_t i = 2; i <= d; ++i) pairs.push_back({a(i), w(i - 1)});

    Poset p = Poset::from_relations(4 * d - 2, pairs);
    std::vector<std::string> labels;
    for (const char* prefix : {"a", "b"})
        for (std::size_t i = 1; i <= d; ++i) labels.push_back(prefix + std::to_string(i));
    for (const char* prefix : {"z", "w"})
        for (std::size_t i = 1; i < d; ++i) labels.push_back(prefix + std::to_string(i));
    p.set_labels(std::move(labels));
    return p;
}

TreeDecomposition kelly_path_decomposition(std::size_t d) {
    require(d >= 3, "Kelly's construction needs d >= 3");
    auto a = [&](std::size_t i) { return i - 1; };
    auto b = [&](std::size_t i) { return d + i - 1; };
    auto z = [&](std::size_t i) { return 2 * d + i - 1; };
    auto w = [&](std::size_t i) { return 3 * d - 1 + i - 1; };

    TreeDecomposition td;
    td.vertex_count = 4 * d - 2;
    td.bags.push_back({a(1), z(1), w(1)});
    td.bags.push_back({b(1), z(1), w(1)});
    for (std::size_t i = 1; i <= d - 2; ++i) {
        td.bags.push_back({a(i + 1), w(i), z(i), w(i + 1)});
        td.bags.push_back({a(i + 1), z(i), z(i + 1), w(i + 1)});
        td.bags.push_back({b(i + 1), z(i), z(i + 1), w(i + 1)});
    }
    td.bags.push_back({a(d), w(d - 1), z(d - 1)});
    td.bags.push_back({b(d), z(d - 1), w(d - 1)});
    for (std::size_t k = 1; k < td.bags.size(); ++k) td.tree_edges.push_back({k - 1, k});
    td.normalize();
    return td;
}

Poset grid_poset(std::size_t n) {
    require(n >= 2, "grid poset needs n >= 2");
    PairList pairs;
    auto id = [&](std::size_t i, std::size_t j) { return i * n + j; };
    auto relate = [&](std::size_t u, std::size_t v, bool u_even) {
        if (u_even)
            pairs.push_back({u, v});
        else
            pairs.push_back({v, u});
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool even = (i + j) % 2 == 0;
            if (i + 1 < n) relate(id(i, j), id(i + 1, j), even);
            if (j + 1 < n) relate(id(i, j), id(i, j + 1), even);
        }
    return Poset::from_relations(n * n, pairs);
}

Poset chain(std::size_t n) {
    require(n >= 1, "chain needs n >= 1");
    PairList pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    return Poset::from_relations(n, pairs);
}

Poset antichain(std::size_t n) {
    require(n >= 1, "antichain needs n >= 1");
    return Poset::from_relations(n, {});
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
    require(density >= 0.0 && density <= 1.0, "density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    const std::vector<Element> perm = random_permutation(n, rng);
    PairList pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (unit_real(rng) < density) pairs.push_back({perm[i], perm[j]});
    return Poset::from_relations(n, pairs);
}

Poset random_tree_poset(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "tree poset needs n >= 1");
    std::mt19937_64 rng(seed);
    const std::vector<Element> perm = random_permutation(n, rng);
    PairList pairs;
    for (std::size_t i = 1; i < n; ++i) {
        const Element child = perm[i];
        const Element parent = perm[below(rng, i)];
        if (rng() & 1)
            pairs.push_back({child, parent});
        else
            pairs.push_back({parent, child});
    }
    return Poset::from_relations(n, pairs);
}

Poset generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::standard: return standard_example(spec.size);
        case Family::kelly: return kelly(spec.size);
        case Family::grid: return grid_poset(spec.size);
        case Family::chain: return chain(spec.size);
        case Family::antichain: return antichain(spec.size);
        case Family::random: return random_poset(spec.size, spec.density, spec.seed);
        case Family::tree: return random_tree_poset(spec.size, spec.seed);
    }
    throw BadParameter("unknown family");
}

}  // namespace posetdim
