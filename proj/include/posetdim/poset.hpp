#ifndef POSETDIM_POSET_HPP
#define POSETDIM_POSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace posetdim {

using Element = std::size_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

struct OrderedPair {
    Element x = 0;
    Element y = 0;

    friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

using PairList = std::vector<OrderedPair>;

// Thrown when a relation list is not acyclic. The witness lists the
// elements of one directed cycle, each related to the next (and the last
// to the first).
class CycleError : public std::runtime_error {
public:
    explicit CycleError(std::vector<Element> cycle);
    const std::vector<Element>& cycle() const { return cycle_; }

private:
    std::vector<Element> cycle_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A finite strict partial order on {0, ..., n-1}, stored as a dense
// closure matrix (up and down rows).
class Poset {
public:
    Poset() = default;

    // Transitive closure of the given strict relations.
    static Poset from_relations(std::size_t n, std::span<const OrderedPair> pairs);

    std::size_t size() const { return up_.size(); }

    bool lt(Element x, Element y) const { return up_[x].test(y); }
    bool le(Element x, Element y) const { return x == y || lt(x, y); }
    bool comparable(Element x, Element y) const { return le(x, y) || lt(y, x); }
    bool incomparable(Element x, Element y) const { return !comparable(x, y); }

    // Elements strictly above / strictly below x.
    const Bits& up_set(Element x) const { return up_[x]; }
    const Bits& down_set(Element x) const { return down_[x]; }

    std::size_t relation_count() const;

    // Subposet induced on `elements`; element i of the result is elements[i].
    Poset induced(std::span<const Element> elements) const;
    // Isomorphic copy in which element x becomes perm[x].
    Poset relabeled(std::span<const Element> perm) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(Element x) const;

    friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

private:
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::vector<std::string> labels_;
};

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on {0, ..., n-1}.
class Graph {
public:
    explicit Graph(std::size_t n = 0) : adj_(n) {}

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Returns false if the edge was already present. Loops are rejected.
    bool add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edge_count_ = 0;
};

// A total order on the ground set, listed from bottom to top.
struct LinearExtension {
    std::vector<Element> order;

    std::vector<std::size_t> positions() const;
    friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

Poset poset_from_relations(std::size_t n, std::span<const OrderedPair> pairs);

// Undirected transitive reduction.
Graph cover_graph(const Poset& poset);
// Directed cover relations (x, y) with x covered by y, sorted.
PairList cover_relations(const Poset& poset);

// Cardinality of a longest chain; 0 for the empty poset.
std::size_t height(const Poset& poset);

PairList incomparable_pairs(const Poset& poset);

bool is_linear_extension(const Poset& poset, const LinearExtension& ext);
bool verify_realizer(const Poset& poset, std::span<const LinearExtension> extensions);

// Some linear extension of the poset (elements sorted by down-set size).
LinearExtension any_linear_extension(const Poset& poset);

// {z : x <= z <= y}, ascending; empty when x is not below y.
std::vector<Element> interval(const Poset& poset, Element x, Element y);

// Text format: `p <n>` then one `<x> <y>` line per relation x < y.
// `#` starts a comment. The writer emits the cover relations in
// lexicographic order, which is the canonical form.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& poset);

}  // namespace posetdim

#endif
