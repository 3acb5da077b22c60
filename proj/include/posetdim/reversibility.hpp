#ifndef POSETDIM_REVERSIBILITY_HPP
#define POSETDIM_REVERSIBILITY_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

// Cyclic sequence of incomparable pairs (x_1,y_1), ..., (x_k,y_k) with
// x_i <= y_{i+1} for every i, indices taken mod k.
struct AlternatingCycle {
    PairList pairs;
};

// Checks the witness against the poset directly.
bool is_alternating_cycle(const Poset& poset, const AlternatingCycle& cycle);

class InvalidPair : public std::invalid_argument {
public:
    explicit InvalidPair(OrderedPair pair);
    OrderedPair pair() const { return pair_; }

private:
    OrderedPair pair_;
};

class NotReversible : public std::runtime_error {
public:
    explicit NotReversible(AlternatingCycle witness);
    const AlternatingCycle& witness() const { return witness_; }

private:
    AlternatingCycle witness_;
};

// Directed-cycle search in the digraph on the pairs of `pairs`, with an arc
// (x,y) -> (x',y') whenever x <= y'. A set of incomparable pairs can be
// reversed by one linear extension exactly when no such cycle exists.
std::optional<AlternatingCycle> find_alternating_cycle(const Poset& poset,
                                                       std::span<const OrderedPair> pairs);

// Linear extension putting y below x for every (x,y) in `pairs`. Ties are
// broken towards smaller element ids.
LinearExtension reversing_extension(const Poset& poset, std::span<const OrderedPair> pairs);

struct DimensionCertificate {
    std::size_t dimension = 0;
    std::vector<PairList> partition;
    std::vector<LinearExtension> extensions;
};

class DimensionNotFound : public std::runtime_error {
public:
    explicit DimensionNotFound(std::size_t d_max);
    std::size_t d_max() const { return d_max_; }

private:
    std::size_t d_max_;
};

inline constexpr std::size_t kDefaultMaxDimension = 6;
inline constexpr std::size_t kExactDimensionMaxElements = 64;

// Least d <= d_max such that the incomparable pairs split into d reversible
// classes, found by backtracking. Exponential; meant for posets with a
// dozen or so elements. Throws DimensionNotFound when dim(P) > d_max.
DimensionCertificate exact_dimension(const Poset& poset,
                                     std::size_t d_max = kDefaultMaxDimension);

}  // namespace posetdim

#endif
