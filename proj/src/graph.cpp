#include "miskit/graph.hpp"

#include <algorithm>
#include <bit>

namespace miskit {

Weight checked_add(Weight a, Weight b) {
    Weight r = a + b;
    if (r < a)
        throw std::overflow_error("weight sum exceeds 64 bits");
    return r;
}

namespace {
constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

void check_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        throw std::invalid_argument("vertex sets belong to different universes");
}
} // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
    if (universe < 0)
        throw std::invalid_argument("negative universe size");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members)
        add(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    if (universe % kWordBits != 0 && !s.words_.empty())
        s.words_.back() &= (std::uint64_t{1} << (universe % kWordBits)) - 1;
    return s;
}

void VertexSet::check_index(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) +
                                " outside universe of size " + std::to_string(n_));
}

bool VertexSet::contains(int v) const {
    check_index(v);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

void VertexSet::add(int v) {
    check_index(v);
    words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::remove(int v) {
    check_index(v);
    words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= ~words_[i];
    return r;
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int v) const {
    int start = v + 1;
    if (start >= n_)
        return -1;
    std::size_t wi = static_cast<std::size_t>(start) / kWordBits;
    std::uint64_t w = words_[wi] >> (start % kWordBits);
    if (w)
        return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi])
            return static_cast<int>(wi) * kWordBits + std::countr_zero(words_[wi]);
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v))
        out.push_back(v);
    return out;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    check_same_universe(a, b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t d = a.words_[i] ^ b.words_[i];
        if (!d)
            continue;
        // All elements below the lowest differing one are shared, so the
        // sequences agree up to that position. If a owns it, a is smaller
        // unless b is exhausted there (then b is a proper prefix of a);
        // symmetrically when b owns it.
        std::uint64_t lowest = d & (~d + 1);
        std::uint64_t above = ~(lowest | (lowest - 1));
        const VertexSet& other = (a.words_[i] & lowest) ? b : a;
        bool rest = (other.words_[i] & above) != 0;
        for (std::size_t j = i + 1; j < a.words_.size() && !rest; ++j)
            rest = other.words_[j] != 0;
        return (a.words_[i] & lowest) ? rest : !rest;
    }
    return false;
}

WeightedGraph::WeightedGraph(int n, std::vector<Weight> weights,
                             const std::vector<std::pair<int, int>>& edges)
    : n_(n), weights_(std::move(weights)) {
    if (n < 0)
        throw graph_error("vertex count must be non-negative");
    if (static_cast<int>(weights_.size()) != n)
        throw graph_error("expected " + std::to_string(n) + " weights, got " +
                          std::to_string(weights_.size()));
    adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw graph_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v)
            throw graph_error("loop edge at vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].add(v);
        adjacency_[static_cast<std::size_t>(v)].add(u);
    }
    for (int v = 0; v < n; ++v)
        edge_count_ += degree(v);
    edge_count_ /= 2;
    for (Weight w : weights_)
        total_weight_ = checked_add(total_weight_, w);
}

Weight WeightedGraph::weight(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
    return weights_[static_cast<std::size_t>(v)];
}

const VertexSet& WeightedGraph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
    return adjacency_[static_cast<std::size_t>(v)];
}

bool WeightedGraph::adjacent(int u, int v) const { return neighbors(u).contains(v); }

int WeightedGraph::degree(int v) const { return neighbors(v).count(); }

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = adjacency_[static_cast<std::size_t>(u)].next(u); v >= 0;
             v = adjacency_[static_cast<std::size_t>(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

namespace {
void check_set_for_graph(const WeightedGraph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set does not match graph");
}
} // namespace

VertexSet neighborhood(const WeightedGraph& g, const VertexSet& s) {
    check_set_for_graph(g, s);
    VertexSet out(g.vertex_count());
    for (int v = s.first(); v >= 0; v = s.next(v))
        out |= g.neighbors(v);
    return out;
}

Weight weight_of(const WeightedGraph& g, const VertexSet& a) {
    check_set_for_graph(g, a);
    Weight total = 0;
    for (int v = a.first(); v >= 0; v = a.next(v))
        total = checked_add(total, g.weight(v));
    return total;
}

bool is_independent(const WeightedGraph& g, const VertexSet& u) {
    check_set_for_graph(g, u);
    for (int v = u.first(); v >= 0; v = u.next(v))
        if (g.neighbors(v).intersects(u))
            return false;
    return true;
}

bool is_mis(const WeightedGraph& g, const VertexSet& u) {
    if (!is_independent(g, u))
        return false;
    VertexSet covered = neighborhood(g, u);
    covered |= u;
    return covered == VertexSet::full(g.vertex_count());
}

} // namespace miskit
