#include "posetdim/rooted_model.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace posetdim {

const char* to_string(NodeRelation rel) {
    switch (rel) {
        case NodeRelation::below: return "below";
        case NodeRelation::above: return "above";
        case NodeRelation::left_of: return "left_of";
        case NodeRelation::right_of: return "right_of";
        case NodeRelation::equal: return "equal";
    }
    return "?";
}

RootedSubtreeModel RootedSubtreeModel::build(const Graph& graph, const TreeDecomposition& td,
                                             const ModelOptions& options) {
    validate_td(graph, td);
    const std::size_t nodes = td.node_count();
    if (options.root >= nodes)
        throw std::invalid_argument("root node " + std::to_string(options.root) + " out of range");

    // Root the decomposition tree and order children.
    const auto adj = td.tree_adjacency();
    std::vector<Node> td_parent(nodes, kNoNode);
    std::vector<std::vector<Node>> td_children(nodes);
    std::vector<Node> preorder;
    {
        std::vector<Node> stack{options.root};
        std::vector<bool> seen(nodes, false);
        seen[options.root] = true;
        while (!stack.empty()) {
            Node u = stack.back();
            stack.pop_back();
            preorder.push_back(u);
            for (Node w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    td_parent[w] = u;
                    td_children[u].push_back(w);
                }
            if (options.child_order == ChildOrder::descending)
                std::reverse(td_children[u].begin(), td_children[u].end());
            for (auto it = td_children[u].rbegin(); it != td_children[u].rend(); ++it)
                stack.push_back(*it);
        }
    }

    // Elements rooted at each decomposition node: those not in the parent's bag.
    auto in_bag = [&](Node u, Element x) {
        return std::binary_search(td.bags[u].begin(), td.bags[u].end(), x);
    };

    RootedSubtreeModel m;
    const std::size_t n = graph.size();
    std::vector<Node> last_copy(nodes, kNoNode);
    std::vector<std::vector<Element>> occupants;
    std::vector<Node> parent;
    std::vector<Node> source;
    for (Node u : preorder) {
        std::vector<Element> rooted;
        std::vector<Element> inherited;
        for (Element x : td.bags[u]) {
            if (td_parent[u] != kNoNode && in_bag(td_parent[u], x))
                inherited.push_back(x);
            else
                rooted.push_back(x);
        }
        if (options.expansion == ExpansionOrder::descending)
            std::reverse(rooted.begin(), rooted.end());

        const std::size_t copies = std::max<std::size_t>(1, rooted.size());
        Node prev = td_parent[u] == kNoNode ? kNoNode : last_copy[td_parent[u]];
        std::vector<Element> load = inherited;
        for (std::size_t j = 0; j < copies; ++j) {
            if (j < rooted.size()) load.push_back(rooted[j]);
            std::vector<Element> sorted = load;
            std::sort(sorted.begin(), sorted.end());
            const Node id = parent.size();
            parent.push_back(prev);
            source.push_back(u);
            occupants.push_back(std::move(sorted));
            prev = id;
        }
        last_copy[u] = prev;
    }

    m.parent_ = std::move(parent);
    m.source_ = std::move(source);
    m.occupants_ = std::move(occupants);
    m.children_.assign(m.parent_.size(), {});
    for (Node v = 0; v < m.parent_.size(); ++v) {
        if (m.parent_[v] == kNoNode)
            m.root_ = v;
        else
            m.children_[m.parent_[v]].push_back(v);
    }
    m.subtree_.assign(n, {});
    for (Node v = 0; v < m.occupants_.size(); ++v)
        for (Element x : m.occupants_[v]) m.subtree_[x].push_back(v);
    m.finish();
    return m;
}

RootedSubtreeModel RootedSubtreeModel::from_rooted_tree(std::vector<std::vector<Node>> children,
                                                        Node root,
                                                        std::vector<std::vector<Node>> subtrees) {
    RootedSubtreeModel m;
    const std::size_t nodes = children.size();
    if (root >= nodes) throw std::invalid_argument("root out of range");
    m.root_ = root;
    m.children_ = std::move(children);
    m.parent_.assign(nodes, kNoNode);
    for (Node u = 0; u < nodes; ++u)
        for (Node c : m.children_[u]) {
            if (c >= nodes || c == root || m.parent_[c] != kNoNode)
                throw std::invalid_argument("children lists do not describe a rooted tree");
            m.parent_[c] = u;
        }
    m.source_.resize(nodes);
    for (Node u = 0; u < nodes; ++u) m.source_[u] = u;
    m.occupants_.assign(nodes, {});
    for (Element x = 0; x < subtrees.size(); ++x) {
        auto& s = subtrees[x];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (Node u : s) {
            if (u >= nodes) throw std::invalid_argument("subtree node out of range");
            m.occupants_[u].push_back(x);
        }
    }
    m.subtree_ = std::move(subtrees);
    m.finish();
    return m;
}

void RootedSubtreeModel::finish() {
    const std::size_t nodes = parent_.size();
    depth_.assign(nodes, 0);
    l1_.assign(nodes, 0);
    l2_.assign(nodes, 0);

    // Left-to-right and right-to-left preorders.
    auto preorder = [&](bool left_first, std::vector<std::size_t>& rank) {
        std::size_t next = 0;
        std::vector<Node> stack{root_};
        while (!stack.empty()) {
            Node u = stack.back();
            stack.pop_back();
            rank[u] = next++;
            const auto& ch = children_[u];
            if (left_first) {
                for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
                    depth_[*it] = depth_[u] + 1;
                    stack.push_back(*it);
                }
            } else {
                for (Node c : ch) stack.push_back(c);
            }
        }
        if (next != nodes) throw std::invalid_argument("tree is not connected");
    };
    preorder(true, l1_);
    preorder(false, l2_);

    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < nodes) ++levels;
    lift_.assign(levels, std::vector<Node>(nodes));
    for (Node u = 0; u < nodes; ++u) lift_[0][u] = parent_[u] == kNoNode ? u : parent_[u];
    for (std::size_t k = 1; k < levels; ++k)
        for (Node u = 0; u < nodes; ++u) lift_[k][u] = lift_[k - 1][lift_[k - 1][u]];

    root_of_.assign(subtree_.size(), kNoNode);
    load_bound_ = 0;
    for (const auto& occ : occupants_) load_bound_ = std::max(load_bound_, occ.size());
    std::vector<bool> root_taken(nodes, false);
    for (Element x = 0; x < subtree_.size(); ++x) {
        const auto& s = subtree_[x];
        if (s.empty()) throw std::invalid_argument("element " + std::to_string(x) + " has an empty subtree");
        std::size_t tops = 0;
        for (Node u : s) {
            if (parent_[u] == kNoNode || !contains(x, parent_[u])) {
                ++tops;
                root_of_[x] = u;
            }
        }
        if (tops != 1)
            throw std::invalid_argument("subtree of element " + std::to_string(x) + " is not connected");
        if (root_taken[root_of_[x]])
            throw std::invalid_argument("two elements share the root node " +
                                        std::to_string(root_of_[x]));
        root_taken[root_of_[x]] = true;
    }
}

bool RootedSubtreeModel::contains(Element x, Node u) const {
    const auto& occ = occupants_[u];
    return std::binary_search(occ.begin(), occ.end(), x);
}

NodeRelation RootedSubtreeModel::relation(Node u, Node v) const {
    if (u == v) return NodeRelation::equal;
    if (tree_le(u, v)) return NodeRelation::below;
    if (tree_le(v, u)) return NodeRelation::above;
    return l1_[u] < l1_[v] ? NodeRelation::left_of : NodeRelation::right_of;
}

Node RootedSubtreeModel::meet(Node u, Node v) const {
    if (depth_[u] < depth_[v]) std::swap(u, v);
    std::size_t diff = depth_[u] - depth_[v];
    for (std::size_t k = 0; diff; ++k, diff >>= 1)
        if (diff & 1) u = lift_[k][u];
    if (u == v) return u;
    for (std::size_t k = lift_.size(); k-- > 0;) {
        if (lift_[k][u] != lift_[k][v]) {
            u = lift_[k][u];
            v = lift_[k][v];
        }
    }
    return parent_[u];
}

Graph RootedSubtreeModel::intersection_graph() const {
    Graph h(element_count());
    for (const auto& occ : occupants_)
        for (std::size_t i = 0; i < occ.size(); ++i)
            for (std::size_t j = i + 1; j < occ.size(); ++j) h.add_edge(occ[i], occ[j]);
    return h;
}

void RootedSubtreeModel::dump(std::ostream& out) const {
    std::vector<std::vector<Element>> rooted_here(node_count());
    for (Element x = 0; x < element_count(); ++x) rooted_here[root_of_[x]].push_back(x);

    std::vector<std::pair<Node, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto [u, indent] = stack.back();
        stack.pop_back();
        out << std::string(2 * indent, ' ') << "node " << u << " (bag " << source_[u] << ") {";
        for (std::size_t i = 0; i < occupants_[u].size(); ++i) out << (i ? " " : "") << occupants_[u][i];
        out << '}';
        if (!rooted_here[u].empty()) {
            out << " roots";
            for (Element x : rooted_here[u]) out << ' ' << x;
        }
        out << '\n';
        const auto& ch = children_[u];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, indent + 1);
    }
}

RootedSubtreeModel build_model(const Graph& graph, const TreeDecomposition& td,
                               const ModelOptions& options) {
    return RootedSubtreeModel::build(graph, td, options);
}

}  // namespace posetdim
