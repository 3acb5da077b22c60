#ifndef POSETDIM_REALIZER_HPP
#define POSETDIM_REALIZER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/decomposition.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/reversibility.hpp"
#include "posetdim/rooted_model.hpp"

namespace posetdim {

// Raised when a step that the construction guarantees fails. Always a bug.
class LemmaViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Elements z reachable from one source x by a sequence x = z_0, ..., z_m = z
// with m <= horizon and r(z_i) in T(z_{i+1}), with the least such m.
struct ReachSet {
    std::size_t horizon = 0;
    std::vector<std::pair<Element, std::size_t>> dist;  // sorted by element

    std::optional<std::size_t> distance(Element z) const;
    bool reaches(Element z, std::size_t within) const;
    bool reaches(Element z) const { return reaches(z, horizon); }
};

ReachSet reach_set(const RootedSubtreeModel& model, Element x, std::size_t horizon);

// Reach sets of every element at one horizon.
class ReachIndex {
public:
    ReachIndex(const RootedSubtreeModel& model, std::size_t horizon);

    std::size_t horizon() const { return horizon_; }
    const ReachSet& from(Element x) const { return sets_[x]; }
    bool reaches(Element x, Element z, std::size_t within) const {
        return sets_[x].reaches(z, within);
    }
    bool reaches(Element x, Element z) const { return sets_[x].reaches(z); }

private:
    std::size_t horizon_;
    std::vector<ReachSet> sets_;
};

// Some z with x <= z <= y that both x and y reach within h-1 steps, where
// h is the poset height. `reach` must have horizon >= h-1.
Element low_point(const Poset& poset, const ReachIndex& reach, std::size_t h, Element x, Element y);

struct PhiColoring {
    std::vector<std::size_t> color;  // 1-based
    std::vector<Element> order;      // greedy order, roots by ascending l1 position
    std::size_t color_count() const;
};

// First-fit over roots in L1 order, avoiding colours of reachable elements.
PhiColoring phi_coloring(const RootedSubtreeModel& model, const ReachIndex& reach);

enum class PairRelation : std::uint8_t { eq = 1, lt = 2, gt = 3, inc = 4 };

struct ValTriple {
    std::size_t phi_x = 0;
    std::size_t phi_z = 0;
    PairRelation rel = PairRelation::eq;

    friend auto operator<=>(const ValTriple&, const ValTriple&) = default;
};

// Sorted, duplicate-free set of triples.
using TauColor = std::vector<ValTriple>;

struct TauColoring {
    std::vector<TauColor> tau;
    // Dense ids of the distinct colours, numbered in sorted colour order.
    std::vector<std::size_t> class_of;
    std::size_t class_count = 0;
};

TauColoring tau_coloring(const Poset& poset, const PhiColoring& phi, const ReachIndex& reach);

struct Signature {
    TauColor tau_x;
    TauColor tau_y;
    int case_id = 0;  // 1..6

    friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Which of the six root-position cases an incomparable pair falls in.
int signature_case(const Poset& poset, const RootedSubtreeModel& model, const TauColoring& tau,
                   OrderedPair pair);
Signature signature(const Poset& poset, const RootedSubtreeModel& model, const TauColoring& tau,
                    OrderedPair pair);

using SignaturePartition = std::map<Signature, PairList>;

SignaturePartition partition_by_signature(const Poset& poset, const RootedSubtreeModel& model);
SignaturePartition partition_by_signature(const Poset& poset, const RootedSubtreeModel& model,
                                          const TauColoring& tau);

struct ConstructionReport {
    std::size_t n = 0;
    std::size_t h = 0;
    std::size_t t = 0;
    std::size_t p = 0;  // colours used by phi
    std::size_t tau_class_count = 0;
    std::size_t d_used = 0;  // number of linear extensions produced
    double bound_log2 = 0;
    std::uint64_t phi_bound = 0;  // 1 + t + ... + t^(2h-2), saturating
    bool phi_bound_ok = false;
    bool signature_bound_ok = false;
    bool classes_reversible = false;
    bool verified = false;
    std::vector<std::size_t> class_sizes;
};

struct Realizer {
    std::vector<LinearExtension> extensions;
    std::size_t size() const { return extensions.size(); }
};

struct Construction {
    Realizer realizer;
    ConstructionReport report;
    SignaturePartition classes;
};

// Partitions Inc(P) by signature, checks each class for alternating cycles
// and reverses each class with one linear extension.
Construction build_realizer(const Poset& poset, const TreeDecomposition& td,
                            const ModelOptions& options = {});

// log2(6) + 8 t^(4h-2), with the power computed exactly. Throws
// std::overflow_error when the result is not representable as a double.
double theoretical_bound_log2(std::uint64_t t, std::uint64_t h);

// 1 + t + ... + t^k, saturating at UINT64_MAX.
std::uint64_t geometric_sum(std::uint64_t t, std::uint64_t k);

}  // namespace posetdim

#endif
