#include "miskit/conjugate.hpp"

namespace miskit {

ConjugateResult conjugate(const WeightedGraph& g, const OrthogonalPairing& p) {
    validate_pairing(g, p);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [u, v] : g.edges())
        edges.emplace_back(p.partner[static_cast<std::size_t>(u)],
                           p.partner[static_cast<std::size_t>(v)]);

    ConjugateResult result;
    result.conjugate = WeightedGraph(g.vertex_count(), g.weights(), edges);
    result.pairing = p;
    result.swap = p.partner;
    return result;
}

VertexSet complement_of_mis(const WeightedGraph& g, const VertexSet& u) {
    if (!is_mis(g, u))
        throw std::invalid_argument("complement is defined for a MIS");
    return u.complement();
}

Weight gap_bound(const WeightedGraph& g, const OrthogonalPairing& p) {
    validate_pairing(g, p);
    Weight total = 0;
    for (auto [u, v] : p.pairs) {
        Weight wu = g.weight(u);
        Weight wv = g.weight(v);
        total = checked_add(total, wu > wv ? wu - wv : wv - wu);
    }
    return total;
}

} // namespace miskit
