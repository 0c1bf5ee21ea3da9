#pragma once

#include "miskit/graph.hpp"

#include <optional>

namespace miskit {

/// A perfect partition of the vertices into orthogonal pairs. Each pair is
/// stored with the smaller index first; pairs are sorted by first member.
struct OrthogonalPairing {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> partner; // involution: partner[partner[v]] == v

    int pair_count() const { return static_cast<int>(pairs.size()); }
};

/// Two adjacent vertices x1, x2 are orthogonal when the neighborhood of each
/// is contained in the neighborhood of every punctured neighbor of the other:
/// for all u in N(x1)\{x2}, N(x2) is a subset of N(u), and symmetrically.
/// Containment is non-strict and vacuous quantifiers count as satisfied, so
/// any edge with a degree-1 endpoint qualifies.
bool are_orthogonal(const WeightedGraph& g, int x1, int x2);

/// All unordered orthogonal pairs, lexicographically sorted.
std::vector<std::pair<int, int>> orthogonal_pairs(const WeightedGraph& g);

/// Same scan, split across OpenMP threads. Identical output to the serial
/// version; kept separate so tests can compare them.
std::vector<std::pair<int, int>> orthogonal_pairs_parallel(const WeightedGraph& g);

/// Searches for a perfect matching inside the orthogonal-pair relation by
/// depth-first backtracking, always pairing the smallest unmatched vertex
/// with its smallest available partner first. Absence is a value, not an
/// error; odd vertex counts yield nullopt immediately.
std::optional<OrthogonalPairing> find_pairing(const WeightedGraph& g);

/// Throws std::invalid_argument unless p is a disjoint cover of g by
/// orthogonal pairs.
void validate_pairing(const WeightedGraph& g, const OrthogonalPairing& p);

/// True iff every pair of p has equal endpoint weights.
bool is_trivial(const WeightedGraph& g, const OrthogonalPairing& p);

/// Structural facts that hold around every orthogonal pair, each checked
/// independently so they can serve as first-class assertions.
struct PairStructureReport {
    std::pair<int, int> pair;
    bool punctured_pairs_not_orthogonal; // no two punctured neighbors are orthogonal
    bool no_common_neighbor;             // the pair lies in no triangle
    bool punctured_disjoint;             // N(x1)\{x2} and N(x2)\{x1} are disjoint

    bool all_hold() const {
        return punctured_pairs_not_orthogonal && no_common_neighbor && punctured_disjoint;
    }
};

/// Requires the given pair to be orthogonal; throws std::invalid_argument
/// otherwise.
PairStructureReport verify_pair_structure(const WeightedGraph& g, std::pair<int, int> pair);

} // namespace miskit
