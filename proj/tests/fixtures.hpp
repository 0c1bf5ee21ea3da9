#pragma once

#include "miskit/graph.hpp"

#include <vector>

namespace fixtures {

using miskit::Weight;
using miskit::WeightedGraph;

inline WeightedGraph path(const std::vector<Weight>& weights) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < static_cast<int>(weights.size()); ++v)
        edges.emplace_back(v, v + 1);
    return WeightedGraph(static_cast<int>(weights.size()), weights, edges);
}

inline WeightedGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return WeightedGraph(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), edges);
}

inline WeightedGraph complete(const std::vector<Weight>& weights) {
    const int n = static_cast<int>(weights.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return WeightedGraph(n, weights, edges);
}

inline WeightedGraph edgeless(int n) {
    return WeightedGraph(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), {});
}

inline WeightedGraph unit_path(int n) {
    return path(std::vector<Weight>(static_cast<std::size_t>(n), 1));
}

/// Canonical five-vertex weighted path used across the suites; expanding it
/// with class sizes (1,2,2,3,1) gives a nine-vertex unit-weight graph whose
/// normalization recovers it.
inline WeightedGraph quotient_path_fixture() {
    return path({1, 2, 2, 3, 1});
}

} // namespace fixtures
