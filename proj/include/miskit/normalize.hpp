#pragma once

#include "miskit/graph.hpp"

namespace miskit {

/// Partition of the vertices into twin classes: maximal groups of vertices
/// with identical open neighborhoods. Classes are ordered by smallest member.
struct TwinPartition {
    std::vector<VertexSet> classes;
    std::vector<int> class_of; // vertex -> class index

    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Quotient of a graph by its twin classes. Quotient vertex j stands for the
/// j-th class; its weight is the class weight sum, and two quotient vertices
/// are adjacent iff members of their classes are adjacent in the source.
struct NormalizationMap {
    WeightedGraph source;
    WeightedGraph quotient;
    TwinPartition partition;
    std::vector<int> class_vertex; // class index -> quotient vertex index
};

TwinPartition twin_classes(const WeightedGraph& g);

NormalizationMap normalize(const WeightedGraph& g);

/// True iff all open neighborhoods are pairwise distinct, i.e. every twin
/// class is a singleton.
bool is_normal(const WeightedGraph& g);

/// Expands a set of quotient vertices to the union of the classes it selects.
/// A maximal independent set of the quotient lifts to one of the source with
/// the same weight.
VertexSet lift_set(const NormalizationMap& map, const VertexSet& quotient_set);

/// Inverse construction for round trips: replaces quotient vertex j by an
/// independent class of sizes[j] fresh vertices (contiguous index blocks),
/// splits its weight as evenly as possible with the remainder going to the
/// lowest indices, and joins all cross pairs for each quotient edge.
WeightedGraph expand_normal(const WeightedGraph& g1, const std::vector<int>& sizes);

} // namespace miskit
