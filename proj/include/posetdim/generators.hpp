#ifndef POSETDIM_GENERATORS_HPP
#define POSETDIM_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "posetdim/decomposition.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

class BadParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { standard, kelly, grid, chain, antichain, random, tree };

struct FamilySpec {
    Family family = Family::chain;
    std::size_t size = 1;  // d for standard/kelly, n otherwise
    double density = 0.5;  // random only
    std::uint64_t seed = 0;  // random and tree only
};

Family parse_family(const std::string& name);
const char* to_string(Family family);

// a_1..a_d are 0..d-1, b_1..b_d are d..2d-1; a_i < b_j iff i != j.
Poset standard_example(std::size_t d);

// Kelly's poset P_d on 4d-2 elements: a's, then b's, then z_1..z_{d-1},
// then w_1..w_{d-1}.
Poset kelly(std::size_t d);
TreeDecomposition kelly_path_decomposition(std::size_t d);

// Height-2 poset whose cover graph is the n x n grid. Vertex (i,j) is
// element i*n+j; even i+j is minimal.
Poset grid_poset(std::size_t n);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

// Random relations along a random permutation, each kept with probability
// `density`, then closed transitively. Deterministic in the seed.
Poset random_poset(std::size_t n, double density, std::uint64_t seed);

// Random tree on n vertices with each edge oriented at random. Every tree
// edge is a cover, so the cover graph is exactly that tree.
Poset random_tree_poset(std::size_t n, std::uint64_t seed);

Poset generate(const FamilySpec& spec);

}  // namespace posetdim

#endif
