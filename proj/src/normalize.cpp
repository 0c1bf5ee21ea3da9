#include "miskit/normalize.hpp"

#include <algorithm>
#include <numeric>

namespace miskit {

TwinPartition twin_classes(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& na = g.neighbors(a);
        const auto& nb = g.neighbors(b);
        if (na == nb)
            return a < b;
        return VertexSet::lex_less(na, nb);
    });

    TwinPartition part;
    part.class_of.assign(static_cast<std::size_t>(n), -1);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        VertexSet cls(n);
        while (j < order.size() && g.neighbors(order[j]) == g.neighbors(order[i]))
            cls.add(order[j++]);
        part.classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    for (int c = 0; c < part.class_count(); ++c)
        for (int v = part.classes[static_cast<std::size_t>(c)].first(); v >= 0;
             v = part.classes[static_cast<std::size_t>(c)].next(v))
            part.class_of[static_cast<std::size_t>(v)] = c;
    return part;
}

NormalizationMap normalize(const WeightedGraph& g) {
    NormalizationMap map;
    map.source = g;
    map.partition = twin_classes(g);

    const int s = map.partition.class_count();
    std::vector<Weight> class_weights(static_cast<std::size_t>(s), 0);
    for (int c = 0; c < s; ++c)
        class_weights[static_cast<std::size_t>(c)] =
            weight_of(g, map.partition.classes[static_cast<std::size_t>(c)]);

    // Members of one class have equal neighborhoods, so adjacency between two
    // classes is decided by any representative pair.
    std::vector<std::pair<int, int>> edges;
    for (int c1 = 0; c1 < s; ++c1) {
        int u = map.partition.classes[static_cast<std::size_t>(c1)].first();
        for (int c2 = c1 + 1; c2 < s; ++c2) {
            int v = map.partition.classes[static_cast<std::size_t>(c2)].first();
            if (g.adjacent(u, v))
                edges.emplace_back(c1, c2);
        }
    }

    map.quotient = WeightedGraph(s, std::move(class_weights), edges);
    map.class_vertex.resize(static_cast<std::size_t>(s));
    std::iota(map.class_vertex.begin(), map.class_vertex.end(), 0);
    return map;
}

bool is_normal(const WeightedGraph& g) {
    return twin_classes(g).class_count() == g.vertex_count();
}

VertexSet lift_set(const NormalizationMap& map, const VertexSet& quotient_set) {
    if (quotient_set.universe() != map.quotient.vertex_count())
        throw std::invalid_argument("set does not match quotient graph");
    VertexSet out(map.source.vertex_count());
    for (int j = quotient_set.first(); j >= 0; j = quotient_set.next(j))
        out |= map.partition.classes[static_cast<std::size_t>(j)];
    return out;
}

WeightedGraph expand_normal(const WeightedGraph& g1, const std::vector<int>& sizes) {
    const int s = g1.vertex_count();
    if (static_cast<int>(sizes.size()) != s)
        throw std::invalid_argument("expected " + std::to_string(s) + " class sizes, got " +
                                    std::to_string(sizes.size()));
    for (int size : sizes)
        if (size < 1)
            throw std::invalid_argument("class sizes must be positive");

    std::vector<int> offset(static_cast<std::size_t>(s) + 1, 0);
    for (int j = 0; j < s; ++j)
        offset[static_cast<std::size_t>(j) + 1] =
            offset[static_cast<std::size_t>(j)] + sizes[static_cast<std::size_t>(j)];
    const int n = offset.back();

    std::vector<Weight> weights(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < s; ++j) {
        Weight base = g1.weight(j) / static_cast<Weight>(sizes[static_cast<std::size_t>(j)]);
        Weight rem = g1.weight(j) % static_cast<Weight>(sizes[static_cast<std::size_t>(j)]);
        for (int k = 0; k < sizes[static_cast<std::size_t>(j)]; ++k)
            weights[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + k)] =
                base + (static_cast<Weight>(k) < rem ? 1 : 0);
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [j1, j2] : g1.edges())
        for (int a = offset[static_cast<std::size_t>(j1)]; a < offset[static_cast<std::size_t>(j1) + 1]; ++a)
            for (int b = offset[static_cast<std::size_t>(j2)]; b < offset[static_cast<std::size_t>(j2) + 1]; ++b)
                edges.emplace_back(a, b);

    return WeightedGraph(n, std::move(weights), edges);
}

} // namespace miskit
