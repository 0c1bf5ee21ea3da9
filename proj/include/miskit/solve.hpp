#pragma once

#include "miskit/embed.hpp"
#include "miskit/graph.hpp"

#include <cstdint>
#include <functional>

namespace miskit {

enum class Direction { max, min };

enum class SolveMethod {
    automatic,        // full enumeration below 12 vertices, branch and bound above
    enumerate,        // scan every MIS (subject to the capacity guard)
    branch_and_bound, // prune against the best weight found so far
};

struct SolveStats {
    std::uint64_t nodes = 0; // search tree nodes visited
    std::uint64_t sets = 0;  // maximal independent sets reached
    double elapsed_seconds = 0.0;
    // reduction pipeline stage sizes (zero unless solve_via_reduction)
    int source_vertices = 0;
    int quotient_vertices = 0;
    int embedded_vertices = 0;
};

struct SolveResult {
    VertexSet set;
    Weight weight = 0;
    Direction direction = Direction::max;
    SolveStats stats;
};

struct SolveOptions {
    SolveMethod method = SolveMethod::automatic;
    bool parallel = false;       // split top-level branch subtrees across OpenMP threads
    bool override_guard = false; // lift the enumeration capacity guard
};

/// Instances above this size refuse full enumeration unless overridden.
inline constexpr int kEnumerationGuard = 24;

/// Visits every maximal independent set exactly once, in lexicographic order
/// of the emitted sets (the recursion always branches on the smallest
/// eligible vertex). Return false from the callback to stop early.
/// Throws capacity_error when the graph exceeds the guard and override is
/// not set.
void enumerate_mis(const WeightedGraph& g, const std::function<bool(const VertexSet&)>& emit,
                   bool override_guard = false, SolveStats* stats = nullptr);

std::vector<VertexSet> enumerate_mis(const WeightedGraph& g, bool override_guard = false);

/// Largest possible number of maximal independent sets in any n-vertex graph:
/// gamma(s) * 3^(r-1) where n = 3r+s, gamma(0)=3, gamma(1)=4, gamma(2)=6,
/// with the small-n conventions bound(1)=1 and bound(2)=2.
std::uint64_t mis_count_bound(int n);

/// Maximum-weight maximal independent set; ties broken by lexicographically
/// smallest vertex set. Deterministic for fixed inputs, including in
/// parallel mode (stats counters excepted).
SolveResult solve_max(const WeightedGraph& g, const SolveOptions& options = {});

/// Minimum-weight maximal independent set (still maximal as a set); same
/// determinism rules as solve_max.
SolveResult solve_min(const WeightedGraph& g, const SolveOptions& options = {});

SolveResult solve(const WeightedGraph& g, Direction direction, const SolveOptions& options = {});

/// Full reduction pipeline: quotient by twin classes, embed the quotient
/// into a twin-orthogonal graph, solve there, project the solution back and
/// lift it through the class partition. The returned weight equals
/// solve_max(g).weight.
SolveResult solve_via_reduction(const WeightedGraph& g, EmbedMode mode,
                                const SolveOptions& options = {});

} // namespace miskit
