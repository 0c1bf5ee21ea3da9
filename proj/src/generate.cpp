#include "miskit/generate.hpp"

#include "miskit/embed.hpp"
#include "miskit/normalize.hpp"

#include <sstream>

namespace miskit {

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("bound must be positive");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

bool SeededRng::bernoulli(double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("probability outside [0,1]");
    const double scale = 9007199254740992.0; // 2^53
    auto threshold = static_cast<std::uint64_t>(p * scale);
    return (engine_() >> 11) < threshold;
}

namespace {

WeightedGraph random_graph(SeededRng& rng, int n, double p, Weight wmin, Weight wmax) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    std::vector<Weight> weights(static_cast<std::size_t>(n));
    for (auto& w : weights)
        w = wmin + rng.next_below(wmax - wmin + 1);
    return WeightedGraph(n, std::move(weights), edges);
}

WeightedGraph moon_moser(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t + 2 < n; t += 3) {
        edges.emplace_back(t, t + 1);
        edges.emplace_back(t, t + 2);
        edges.emplace_back(t + 1, t + 2);
    }
    return WeightedGraph(n, std::vector<Weight>(static_cast<std::size_t>(n), 1), edges);
}

WeightedGraph twin_ortho(SeededRng& rng, int n, double p, Weight wmin, Weight wmax,
                         bool mirror_weights) {
    WeightedGraph base = random_graph(rng, n, p, 1, 1);
    NormalizationMap nm = normalize(base);
    EmbeddingInfo info = embed_full(nm.quotient);

    const int m = info.embedded.vertex_count();
    std::vector<Weight> weights(static_cast<std::size_t>(m), 0);
    for (int v = info.original_vertices.first(); v >= 0; v = info.original_vertices.next(v))
        weights[static_cast<std::size_t>(v)] = wmin + rng.next_below(wmax - wmin + 1);
    if (mirror_weights)
        for (auto [u, v] : info.pairing.pairs)
            weights[static_cast<std::size_t>(v)] = weights[static_cast<std::size_t>(u)];

    return WeightedGraph(m, std::move(weights), info.embedded.edges());
}

} // namespace

GraphDocument generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
    if (params.n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    if (params.edge_probability < 0.0 || params.edge_probability > 1.0)
        throw std::invalid_argument("edge probability outside [0,1]");
    if (params.weight_min > params.weight_max)
        throw std::invalid_argument("weight range is empty");

    SeededRng rng(seed);
    GraphDocument doc;
    switch (kind) {
    case GenKind::random:
        doc.graph = random_graph(rng, params.n, params.edge_probability, params.weight_min,
                                 params.weight_max);
        break;
    case GenKind::moon_moser:
        if (params.n % 3 != 0)
            throw std::invalid_argument("moon-moser needs n divisible by 3");
        doc.graph = moon_moser(params.n);
        break;
    case GenKind::twin_ortho:
        doc.graph = twin_ortho(rng, params.n, params.edge_probability, params.weight_min,
                               params.weight_max, false);
        break;
    case GenKind::trivial_twin_ortho:
        doc.graph = twin_ortho(rng, params.n, params.edge_probability, params.weight_min,
                               params.weight_max, true);
        break;
    }

    std::ostringstream desc;
    desc << "gen " << to_string(kind) << " n=" << params.n;
    if (kind == GenKind::random || kind == GenKind::twin_ortho ||
        kind == GenKind::trivial_twin_ortho)
        desc << " p=" << params.edge_probability << " w=[" << params.weight_min << ","
             << params.weight_max << "]";
    desc << " seed=" << seed;
    doc.provenance = desc.str();
    return doc;
}

GenKind gen_kind_from_string(const std::string& name) {
    if (name == "random")
        return GenKind::random;
    if (name == "moon-moser")
        return GenKind::moon_moser;
    if (name == "twin-ortho")
        return GenKind::twin_ortho;
    if (name == "trivial-twin-ortho")
        return GenKind::trivial_twin_ortho;
    throw std::invalid_argument("unknown generator kind '" + name + "'");
}

std::string to_string(GenKind kind) {
    switch (kind) {
    case GenKind::random:
        return "random";
    case GenKind::moon_moser:
        return "moon-moser";
    case GenKind::twin_ortho:
        return "twin-ortho";
    case GenKind::trivial_twin_ortho:
        return "trivial-twin-ortho";
    }
    return "?";
}

} // namespace miskit
