#ifndef POSETDIM_ROOTED_MODEL_HPP
#define POSETDIM_ROOTED_MODEL_HPP

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <vector>

#include "posetdim/decomposition.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

using Node = std::size_t;
inline constexpr Node kNoNode = std::numeric_limits<Node>::max();

enum class ChildOrder { ascending, descending };
enum class ExpansionOrder { ascending, descending };

struct ModelOptions {
    Node root = 0;                                  // decomposition node used as root
    ChildOrder child_order = ChildOrder::ascending;  // by decomposition node id
    ExpansionOrder expansion = ExpansionOrder::ascending;  // by element id
};

enum class NodeRelation { below, above, left_of, right_of, equal };

const char* to_string(NodeRelation rel);

// A rooted tree with, for each element x, a subtree T(x) whose root r(x)
// is distinct for distinct elements. Built from a tree decomposition by
// splitting every node that is the topmost bag of several elements into a
// chain, one copy per such element.
class RootedSubtreeModel {
public:
    static RootedSubtreeModel build(const Graph& graph, const TreeDecomposition& td,
                                    const ModelOptions& options = {});

    // Builds directly from a rooted tree and subtree family; used for tests
    // and tools. `parent[root] == kNoNode`, children are ordered by the
    // order in which they appear in `children`.
    static RootedSubtreeModel from_rooted_tree(std::vector<std::vector<Node>> children, Node root,
                                               std::vector<std::vector<Node>> subtrees);

    std::size_t node_count() const { return parent_.size(); }
    std::size_t element_count() const { return subtree_.size(); }

    Node root() const { return root_; }
    Node parent(Node u) const { return parent_[u]; }
    const std::vector<Node>& children(Node u) const { return children_[u]; }
    std::size_t depth(Node u) const { return depth_[u]; }
    std::size_t l1_pos(Node u) const { return l1_[u]; }
    std::size_t l2_pos(Node u) const { return l2_[u]; }
    // Decomposition node this node was copied from (itself when built
    // with from_rooted_tree).
    Node source(Node u) const { return source_[u]; }

    const std::vector<Node>& subtree(Element x) const { return subtree_[x]; }
    Node root_of(Element x) const { return root_of_[x]; }
    // Elements whose subtree contains u, ascending.
    const std::vector<Element>& occupants(Node u) const { return occupants_[u]; }
    bool contains(Element x, Node u) const;
    // Largest node load (t+1 in the width bound).
    std::size_t load_bound() const { return load_bound_; }

    // u <= v in tree order: u lies on the path from v to the root.
    bool tree_le(Node u, Node v) const { return l1_[u] <= l1_[v] && l2_[u] <= l2_[v]; }
    NodeRelation relation(Node u, Node v) const;
    Node meet(Node u, Node v) const;

    // Edge {x,y} iff T(x) and T(y) share a node.
    Graph intersection_graph() const;

    void dump(std::ostream& out) const;

private:
    void finish();

    Node root_ = 0;
    std::vector<Node> parent_;
    std::vector<std::vector<Node>> children_;
    std::vector<Node> source_;
    std::vector<std::size_t> depth_;
    std::vector<std::size_t> l1_;
    std::vector<std::size_t> l2_;
    std::vector<std::vector<Node>> lift_;  // lift_[k][u]: 2^k-th ancestor (root maps to itself)
    std::vector<std::vector<Node>> subtree_;
    std::vector<Node> root_of_;
    std::vector<std::vector<Element>> occupants_;
    std::size_t load_bound_ = 0;
};

RootedSubtreeModel build_model(const Graph& graph, const TreeDecomposition& td,
                               const ModelOptions& options = {});

}  // namespace posetdim

#endif
