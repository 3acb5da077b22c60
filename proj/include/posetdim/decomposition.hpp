#ifndef POSETDIM_DECOMPOSITION_HPP
#define POSETDIM_DECOMPOSITION_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

// Tree of bags over the vertices of a graph. Nodes are 0..bags.size()-1;
// each bag is kept sorted.
struct TreeDecomposition {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> bags;
    std::vector<Edge> tree_edges;

    std::size_t node_count() const { return bags.size(); }
    std::vector<std::vector<std::size_t>> tree_adjacency() const;

    // Sorts bags and tree edges into canonical form.
    void normalize();

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct WidthReport {
    std::size_t width = 0;
    std::size_t node_count = 0;
    bool is_path = false;
};

class InvalidDecomposition : public std::runtime_error {
public:
    enum class Kind { malformed_tree, uncovered_vertex, uncovered_edge, disconnected_trace };

    // witness: the offending vertex, edge endpoints, or tree nodes.
    InvalidDecomposition(Kind kind, std::vector<std::size_t> witness, const std::string& what);
    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    Kind kind_;
    std::vector<std::size_t> witness_;
};

class TooLarge : public std::invalid_argument {
public:
    TooLarge(std::size_t n, std::size_t limit);
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
};

WidthReport validate_td(const Graph& graph, const TreeDecomposition& td);

struct WidthResult {
    std::size_t width = 0;
    TreeDecomposition decomposition;
};

inline constexpr std::size_t kExactTreewidthLimit = 16;
inline constexpr std::size_t kExactPathwidthLimit = 16;

// Subset dynamic programs over elimination / vertex-separation orderings.
// Both are O(2^n poly(n)) and refuse graphs above their limits.
WidthResult exact_treewidth_small(const Graph& graph);
WidthResult exact_pathwidth_small(const Graph& graph);

// Series-parallel reduction: delete vertices of degree <= 1, suppress
// vertices of degree 2 (dropping parallel edges). The graph has tree-width
// at most 2 iff this empties it.
bool is_treewidth_at_most_2(const Graph& graph);

// Decomposition with one bag per vertex: the vertex plus its neighbours at
// the moment it is eliminated in `order`.
TreeDecomposition decomposition_from_elimination_order(const Graph& graph,
                                                        std::span<const std::size_t> order);

// Width-1 decomposition of a forest (one bag {v, parent(v)} per vertex).
TreeDecomposition forest_decomposition(const Graph& forest);

// PACE formats. Vertex and bag ids are 1-based on disk.
Graph read_graph_gr(std::istream& in);
void write_graph_gr(std::ostream& out, const Graph& graph);
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td);

}  // namespace posetdim

#endif
