#include "miskit/embed.hpp"

#include <algorithm>

namespace miskit {

namespace {

/// Builds the supergraph given the pendant attachments, in attachment order:
/// pendant k gets index n+k and hangs off covered[k].
EmbeddingInfo build_embedding(const WeightedGraph& g, const std::vector<int>& pendant_targets,
                              std::vector<std::pair<int, int>> kept_pairs) {
    const int n = g.vertex_count();
    const int p = static_cast<int>(pendant_targets.size());
    const int m = n + p;

    std::vector<Weight> weights(static_cast<std::size_t>(m), 0);
    for (int v = 0; v < n; ++v)
        weights[static_cast<std::size_t>(v)] = g.weight(v);

    auto edges = g.edges();
    EmbeddingInfo info;
    info.attach.assign(static_cast<std::size_t>(m), -1);
    for (int k = 0; k < p; ++k) {
        int pendant = n + k;
        edges.emplace_back(pendant_targets[static_cast<std::size_t>(k)], pendant);
        info.attach[static_cast<std::size_t>(pendant)] =
            pendant_targets[static_cast<std::size_t>(k)];
        kept_pairs.emplace_back(pendant_targets[static_cast<std::size_t>(k)], pendant);
    }

    info.original = g;
    info.embedded = WeightedGraph(m, std::move(weights), edges);
    info.original_vertices = VertexSet(m);
    for (int v = 0; v < n; ++v)
        info.original_vertices.add(v);
    info.added_vertices = info.original_vertices.complement();

    std::sort(kept_pairs.begin(), kept_pairs.end());
    info.pairing.pairs = std::move(kept_pairs);
    info.pairing.partner.assign(static_cast<std::size_t>(m), -1);
    for (auto [u, v] : info.pairing.pairs) {
        info.pairing.partner[static_cast<std::size_t>(u)] = v;
        info.pairing.partner[static_cast<std::size_t>(v)] = u;
    }
    return info;
}

} // namespace

EmbeddingInfo embed_full(const WeightedGraph& g) {
    std::vector<int> targets(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        targets[static_cast<std::size_t>(v)] = v;
    return build_embedding(g, targets, {});
}

EmbeddingInfo embed_minimal(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : orthogonal_pairs(g)) {
        if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)])
            continue;
        covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
        kept.emplace_back(u, v);
    }
    std::vector<int> targets;
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            targets.push_back(v);
    return build_embedding(g, targets, std::move(kept));
}

EmbeddingInfo embed(const WeightedGraph& g, EmbedMode mode) {
    return mode == EmbedMode::full ? embed_full(g) : embed_minimal(g);
}

VertexSet project(const EmbeddingInfo& info, const VertexSet& embedded_mis) {
    if (!is_mis(info.embedded, embedded_mis))
        throw std::invalid_argument("projection input is not a MIS of the embedded graph");

    const int n = info.original.vertex_count();
    VertexSet result(n);
    for (int v = embedded_mis.first(); v >= 0 && v < n; v = embedded_mis.next(v))
        result.add(v);

    // Dropping zero-weight pendants can leave vertices undominated; extend
    // greedily until the set is maximal again.
    for (;;) {
        VertexSet covered = neighborhood(info.original, result);
        covered |= result;
        int missing = covered.complement().first();
        if (missing < 0)
            break;
        result.add(missing);
    }
    return result;
}

} // namespace miskit
