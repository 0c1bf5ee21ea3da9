#pragma once

#include "miskit/graph.hpp"
#include "miskit/orthogonal.hpp"

namespace miskit {

/// Conjugate of a twin-orthogonal graph under a chosen pairing: every edge is
/// transported by swapping each pair's endpoints, weights stay with their
/// vertex indices. Conjugation is an involution.
struct ConjugateResult {
    WeightedGraph conjugate;
    OrthogonalPairing pairing; // carried over; remains valid for the conjugate
    std::vector<int> swap;     // the renaming involution used
};

/// Requires p to be a valid pairing of g.
ConjugateResult conjugate(const WeightedGraph& g, const OrthogonalPairing& p);

/// For a MIS u of g the complement X\u equals the neighborhood of u; on a
/// twin-orthogonal graph it is itself a MIS of the conjugate. Throws unless u
/// is a MIS of g.
VertexSet complement_of_mis(const WeightedGraph& g, const VertexSet& u);

/// Sum over all pairs of the absolute weight difference between partners:
/// an upper bound on the spread between the maximum- and minimum-weight MIS.
Weight gap_bound(const WeightedGraph& g, const OrthogonalPairing& p);

} // namespace miskit
