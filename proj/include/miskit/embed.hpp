#pragma once

#include "miskit/graph.hpp"
#include "miskit/orthogonal.hpp"

namespace miskit {

enum class EmbedMode { full, minimal };

/// A pendant embedding of a graph into a twin-orthogonal supergraph. The
/// original vertices keep their indices; added vertices have weight 0 and
/// degree exactly 1.
struct EmbeddingInfo {
    WeightedGraph original;
    WeightedGraph embedded;
    VertexSet original_vertices; // in the embedded universe
    VertexSet added_vertices;
    OrthogonalPairing pairing;
    std::vector<int> attach; // embedded index -> attachment point (-1 for originals)

    int added_count() const { return added_vertices.count(); }
};

/// Attaches one zero-weight pendant to every vertex; the pairing matches each
/// vertex with its pendant. Always yields a normal twin-orthogonal graph with
/// twice the vertices.
EmbeddingInfo embed_full(const WeightedGraph& g);

/// Covers as many vertices as possible with a greedy maximal set of disjoint
/// orthogonal pairs (taken in lexicographic order), then attaches one
/// zero-weight pendant to each uncovered vertex.
EmbeddingInfo embed_minimal(const WeightedGraph& g);

EmbeddingInfo embed(const WeightedGraph& g, EmbedMode mode);

/// Restricts a maximal independent set of the embedded graph to the original
/// vertices, then repairs maximality by greedily adding the smallest
/// undominated vertex. Weights are non-negative, so the repair never loses
/// weight; for a maximum-weight input the result is a maximum-weight MIS of
/// the original with equal weight.
VertexSet project(const EmbeddingInfo& info, const VertexSet& embedded_mis);

} // namespace miskit
