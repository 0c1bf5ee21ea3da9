#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace miskit {

using Weight = std::uint64_t;

/// Construction-time violation (loop edge, bad endpoint, weight overflow).
class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation refused because the instance exceeds the enumeration guard.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Weight checked_add(Weight a, Weight b);

/// Subset of the vertices 0..n-1 of a fixed universe, stored as a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);

    static VertexSet full(int universe);

    int universe() const { return n_; }

    bool contains(int v) const;
    void add(int v);
    void remove(int v);

    int count() const;
    bool empty() const;

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& subtract(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    /// Smallest member, or -1 when empty.
    int first() const;
    /// Smallest member greater than v, or -1. Supports `for (v = first(); v >= 0; v = next(v))`.
    int next(int v) const;

    std::vector<int> members() const;

    bool operator==(const VertexSet& other) const = default;

    /// Orders sets by their ascending index sequences, e.g. {0,2} < {0,3} < {1,3}.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

private:
    void check_index(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected loop-free graph with non-negative integer vertex weights.
/// Immutable after construction; the total vertex weight is checked to fit
/// in 64 bits so that subset sums never overflow downstream.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Weight> weights,
                  const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    Weight weight(int v) const;
    const std::vector<Weight>& weights() const { return weights_; }
    Weight total_weight() const { return total_weight_; }

    /// Open neighborhood of v as a bitset.
    const VertexSet& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const WeightedGraph& other) const = default;

private:
    int n_ = 0;
    int edge_count_ = 0;
    Weight total_weight_ = 0;
    std::vector<Weight> weights_;
    std::vector<VertexSet> adjacency_;
};

/// Union of the open neighborhoods of the members of s.
VertexSet neighborhood(const WeightedGraph& g, const VertexSet& s);

/// Sum of vertex weights over a.
Weight weight_of(const WeightedGraph& g, const VertexSet& a);

/// True iff no two members of u are adjacent.
bool is_independent(const WeightedGraph& g, const VertexSet& u);

/// True iff u is independent and every vertex outside u has a neighbor in u.
bool is_mis(const WeightedGraph& g, const VertexSet& u);

} // namespace miskit
