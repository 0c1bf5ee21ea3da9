#include "miskit/orthogonal.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace miskit {

namespace {

bool half_condition(const WeightedGraph& g, int x1, int x2) {
    // for every u in N(x1)\{x2}: N(x2) subset of N(u)
    const VertexSet& n1 = g.neighbors(x1);
    const VertexSet& n2 = g.neighbors(x2);
    for (int u = n1.first(); u >= 0; u = n1.next(u)) {
        if (u == x2)
            continue;
        if (!n2.is_subset_of(g.neighbors(u)))
            return false;
    }
    return true;
}

} // namespace

bool are_orthogonal(const WeightedGraph& g, int x1, int x2) {
    if (x1 == x2)
        throw std::invalid_argument("orthogonality is defined for distinct vertices");
    if (!g.adjacent(x1, x2))
        return false;
    return half_condition(g, x1, x2) && half_condition(g, x2, x1);
}

std::vector<std::pair<int, int>> orthogonal_pairs(const WeightedGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const VertexSet& nu = g.neighbors(u);
        for (int v = nu.next(u); v >= 0; v = nu.next(v))
            if (are_orthogonal(g, u, v))
                out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::pair<int, int>> orthogonal_pairs_parallel(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> per_vertex(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(u);
        for (int v = nu.next(u); v >= 0; v = nu.next(v))
            if (are_orthogonal(g, u, v))
                per_vertex[static_cast<std::size_t>(u)].emplace_back(u, v);
    }
    std::vector<std::pair<int, int>> out;
    for (auto& bucket : per_vertex)
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

namespace {

struct PairingSearch {
    int n;
    std::vector<std::vector<int>> candidates; // per vertex, ascending
    std::vector<int> partner;

    bool extend() {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (partner[static_cast<std::size_t>(v)] < 0) {
                u = v;
                break;
            }
        if (u < 0)
            return true;
        for (int v : candidates[static_cast<std::size_t>(u)]) {
            if (partner[static_cast<std::size_t>(v)] >= 0)
                continue;
            partner[static_cast<std::size_t>(u)] = v;
            partner[static_cast<std::size_t>(v)] = u;
            if (extend())
                return true;
            partner[static_cast<std::size_t>(u)] = -1;
            partner[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<OrthogonalPairing> find_pairing(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0)
        return std::nullopt;

    PairingSearch search;
    search.n = n;
    search.candidates.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : orthogonal_pairs(g)) {
        search.candidates[static_cast<std::size_t>(u)].push_back(v);
        search.candidates[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& c : search.candidates) {
        std::sort(c.begin(), c.end());
        if (c.empty() && n > 0)
            return std::nullopt;
    }
    search.partner.assign(static_cast<std::size_t>(n), -1);
    if (!search.extend())
        return std::nullopt;

    OrthogonalPairing p;
    p.partner = std::move(search.partner);
    for (int v = 0; v < n; ++v)
        if (v < p.partner[static_cast<std::size_t>(v)])
            p.pairs.emplace_back(v, p.partner[static_cast<std::size_t>(v)]);
    return p;
}

void validate_pairing(const WeightedGraph& g, const OrthogonalPairing& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.partner.size()) != n)
        throw std::invalid_argument("pairing does not match graph size");
    if (static_cast<int>(p.pairs.size()) * 2 != n)
        throw std::invalid_argument("pairing must cover all vertices");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (auto [u, v] : p.pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n || u >= v)
            throw std::invalid_argument("malformed pair in pairing");
        if (seen[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("pairing reuses a vertex");
        seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(v)] = true;
        if (p.partner[static_cast<std::size_t>(u)] != v || p.partner[static_cast<std::size_t>(v)] != u)
            throw std::invalid_argument("partner map disagrees with pair list");
        if (!are_orthogonal(g, u, v))
            throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not orthogonal");
    }
}

bool is_trivial(const WeightedGraph& g, const OrthogonalPairing& p) {
    validate_pairing(g, p);
    for (auto [u, v] : p.pairs)
        if (g.weight(u) != g.weight(v))
            return false;
    return true;
}

PairStructureReport verify_pair_structure(const WeightedGraph& g, std::pair<int, int> pair) {
    auto [x1, x2] = pair;
    if (!are_orthogonal(g, x1, x2))
        throw std::invalid_argument("pair (" + std::to_string(x1) + "," + std::to_string(x2) +
                                    ") is not orthogonal");

    PairStructureReport report{pair, true, true, true};

    VertexSet punctured1 = g.neighbors(x1);
    punctured1.remove(x2);
    VertexSet punctured2 = g.neighbors(x2);
    punctured2.remove(x1);

    auto side_clean = [&](const VertexSet& side) {
        for (int a = side.first(); a >= 0; a = side.next(a))
            for (int b = side.next(a); b >= 0; b = side.next(b))
                if (are_orthogonal(g, a, b))
                    return false;
        return true;
    };
    report.punctured_pairs_not_orthogonal = side_clean(punctured1) && side_clean(punctured2);
    report.no_common_neighbor = !g.neighbors(x1).intersects(g.neighbors(x2));
    report.punctured_disjoint = !punctured1.intersects(punctured2);
    return report;
}

} // namespace miskit
