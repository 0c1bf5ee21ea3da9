#include "miskit/verify.hpp"

#include "miskit/conjugate.hpp"
#include "miskit/embed.hpp"
#include "miskit/normalize.hpp"
#include "miskit/orthogonal.hpp"
#include "miskit/solve.hpp"

#include <algorithm>
#include <sstream>

namespace miskit {

int VerificationReport::passed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckResult::Status::pass;
    }));
}

int VerificationReport::failed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckResult::Status::fail;
    }));
}

int VerificationReport::skipped() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckResult::Status::skipped;
    }));
}

std::string format_set(const VertexSet& s) {
    std::ostringstream out;
    out << "{";
    bool sep = false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (sep)
            out << ", ";
        out << v;
        sep = true;
    }
    out << "}";
    return out.str();
}

namespace checks {

std::optional<std::string> pairs_hit_exactly_once(const std::vector<std::pair<int, int>>& pairs,
                                                  const std::vector<VertexSet>& all_mis) {
    for (const auto& u : all_mis)
        for (auto [a, b] : pairs) {
            int hits = (u.contains(a) ? 1 : 0) + (u.contains(b) ? 1 : 0);
            if (hits != 1)
                return "pair (" + std::to_string(a) + "," + std::to_string(b) + ") hit " +
                       std::to_string(hits) + " times by MIS " + format_set(u);
        }
    return std::nullopt;
}

std::optional<std::string> sets_are_class_unions(const std::vector<VertexSet>& classes,
                                                 const std::vector<VertexSet>& sets) {
    for (const auto& s : sets)
        for (const auto& cls : classes)
            if (cls.intersects(s) && !cls.is_subset_of(s))
                return "set " + format_set(s) + " splits class " + format_set(cls);
    return std::nullopt;
}

std::optional<std::string> sets_have_cardinality(int cardinality,
                                                 const std::vector<VertexSet>& sets) {
    for (const auto& s : sets)
        if (s.count() != cardinality)
            return "set " + format_set(s) + " has cardinality " + std::to_string(s.count()) +
                   ", expected " + std::to_string(cardinality);
    return std::nullopt;
}

} // namespace checks

namespace {

using Detail = std::optional<std::string>;

struct Instance {
    const WeightedGraph& g;
    std::vector<VertexSet> all_mis;
    TwinPartition partition;
    std::vector<std::pair<int, int>> ortho_pairs;
    std::optional<OrthogonalPairing> pairing;
};

Detail check_mis_class_unions(const Instance& in) {
    return checks::sets_are_class_unions(in.partition.classes, in.all_mis);
}

Detail check_neighborhood_class_unions(const Instance& in) {
    for (int v = 0; v < in.g.vertex_count(); ++v)
        for (const auto& cls : in.partition.classes) {
            const VertexSet& nb = in.g.neighbors(v);
            if (cls.intersects(nb) && !cls.is_subset_of(nb))
                return "neighborhood of " + std::to_string(v) + " splits class " +
                       format_set(cls);
        }
    // same statement one level up: class neighborhoods are unions of classes
    for (const auto& cls : in.partition.classes) {
        VertexSet nb = neighborhood(in.g, cls);
        for (const auto& other : in.partition.classes)
            if (other.intersects(nb) && !other.is_subset_of(nb))
                return "neighborhood of class " + format_set(cls) + " splits class " +
                       format_set(other);
    }
    return std::nullopt;
}

Detail check_pendant_orthogonality(const Instance& in) {
    for (int v = 0; v < in.g.vertex_count(); ++v) {
        if (in.g.degree(v) != 1)
            continue;
        int u = in.g.neighbors(v).first();
        if (!are_orthogonal(in.g, v, u))
            return "pendant edge (" + std::to_string(v) + "," + std::to_string(u) +
                   ") is not orthogonal";
    }
    return std::nullopt;
}

Detail check_pair_mis_coverage(const Instance& in) {
    return checks::pairs_hit_exactly_once(in.ortho_pairs, in.all_mis);
}

Detail check_embedding_optimum(const Instance& in) {
    Weight direct = solve_max(in.g).weight;
    for (EmbedMode mode : {EmbedMode::full, EmbedMode::minimal}) {
        EmbeddingInfo info = embed(in.g, mode);
        SolveResult embedded = solve_max(info.embedded);
        if (embedded.weight != direct)
            return "embedded optimum " + std::to_string(embedded.weight) +
                   " != direct optimum " + std::to_string(direct);
        VertexSet projected = project(info, embedded.set);
        if (!is_mis(in.g, projected))
            return "projection " + format_set(projected) + " is not a MIS";
        if (weight_of(in.g, projected) != direct)
            return "projection " + format_set(projected) + " has weight " +
                   std::to_string(weight_of(in.g, projected)) + ", expected " +
                   std::to_string(direct);
    }
    return std::nullopt;
}

Detail check_uniform_cardinality(const Instance& in) {
    return checks::sets_have_cardinality(in.g.vertex_count() / 2, in.all_mis);
}

Detail check_trivial_equal_weights(const Instance& in) {
    if (in.all_mis.empty())
        return std::nullopt;
    Weight w0 = weight_of(in.g, in.all_mis.front());
    for (const auto& u : in.all_mis)
        if (weight_of(in.g, u) != w0)
            return "MIS " + format_set(u) + " has weight " + std::to_string(weight_of(in.g, u)) +
                   ", expected " + std::to_string(w0);
    return std::nullopt;
}

Detail check_pair_structure(const Instance& in) {
    for (auto pair : in.ortho_pairs) {
        PairStructureReport r = verify_pair_structure(in.g, pair);
        if (!r.all_hold())
            return "pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                   ") violates: " +
                   std::string(!r.punctured_pairs_not_orthogonal ? "[punctured orthogonal pair] "
                                                                 : "") +
                   std::string(!r.no_common_neighbor ? "[common neighbor] " : "") +
                   std::string(!r.punctured_disjoint ? "[punctured overlap]" : "");
    }
    return std::nullopt;
}

Detail check_conjugate_complements(const Instance& in) {
    ConjugateResult conj = conjugate(in.g, *in.pairing);
    for (const auto& u : in.all_mis) {
        VertexSet comp = complement_of_mis(in.g, u);
        if (!is_mis(conj.conjugate, comp))
            return "complement " + format_set(comp) + " of MIS " + format_set(u) +
                   " is not a MIS of the conjugate";
    }
    return std::nullopt;
}

Detail check_complement_weight_identity(const Instance& in) {
    const Weight total = in.g.total_weight();
    for (const auto& u : in.all_mis) {
        VertexSet gamma = neighborhood(in.g, u);
        if (!(gamma == u.complement()))
            return "neighborhood of MIS " + format_set(u) + " is not its complement";
        if (checked_add(weight_of(in.g, u), weight_of(in.g, gamma)) != total)
            return "weights of " + format_set(u) + " and its complement do not sum to the total";
    }
    // spot-check the order reversal on a bounded number of MIS pairs
    const std::size_t cap = std::min<std::size_t>(in.all_mis.size(), 64);
    for (std::size_t i = 0; i < cap; ++i)
        for (std::size_t j = i + 1; j < cap; ++j) {
            Weight wi = weight_of(in.g, in.all_mis[i]);
            Weight wj = weight_of(in.g, in.all_mis[j]);
            Weight ci = weight_of(in.g, in.all_mis[i].complement());
            Weight cj = weight_of(in.g, in.all_mis[j].complement());
            if ((wi >= wj) != (ci <= cj))
                return "weight order of " + format_set(in.all_mis[i]) + " and " +
                       format_set(in.all_mis[j]) + " is not reversed on complements";
        }
    return std::nullopt;
}

Detail check_duality(const Instance& in) {
    ConjugateResult conj = conjugate(in.g, *in.pairing);
    SolveResult best = solve_max(in.g);
    SolveResult dual = solve_min(conj.conjugate);

    if (checked_add(best.weight, dual.weight) != in.g.total_weight())
        return "max weight " + std::to_string(best.weight) + " plus conjugate min weight " +
               std::to_string(dual.weight) + " misses the total " +
               std::to_string(in.g.total_weight());

    VertexSet comp = best.set.complement();
    if (!is_mis(conj.conjugate, comp))
        return "complement of the maximum MIS is not a MIS of the conjugate";
    if (weight_of(conj.conjugate, comp) != dual.weight)
        return "complement of the maximum MIS is not minimum on the conjugate";

    VertexSet dual_comp = dual.set.complement();
    if (!is_mis(in.g, dual_comp) || weight_of(in.g, dual_comp) != best.weight)
        return "complement of the conjugate minimum is not maximum on the source";
    return std::nullopt;
}

Detail check_gap_bound(const Instance& in) {
    Weight hi = solve_max(in.g).weight;
    Weight lo = solve_min(in.g).weight;
    Weight bound = gap_bound(in.g, *in.pairing);
    if (lo > hi)
        return "minimum weight exceeds maximum weight";
    if (hi - lo > bound)
        return "gap " + std::to_string(hi - lo) + " exceeds bound " + std::to_string(bound);
    return std::nullopt;
}

struct CheckEntry {
    const char* id;
    const char* name;
    bool needs_pairing;
    bool needs_trivial;
    Detail (*run)(const Instance&);
};

constexpr CheckEntry kChecks[] = {
    {"2.1", "every MIS is a union of twin classes", false, false, check_mis_class_unions},
    {"2.2", "neighborhoods are unions of twin classes", false, false,
     check_neighborhood_class_unions},
    {"3.1", "pendant edges are orthogonal", false, false, check_pendant_orthogonality},
    {"3.2", "every MIS hits each orthogonal pair exactly once", false, false,
     check_pair_mis_coverage},
    {"3.3", "pendant embeddings preserve the optimum weight", false, false,
     check_embedding_optimum},
    {"4.1", "all MIS of a twin-orthogonal graph have cardinality n/2", true, false,
     check_uniform_cardinality},
    {"4.2", "all MIS of a trivial twin-orthogonal graph have equal weight", true, true,
     check_trivial_equal_weights},
    {"4.3", "orthogonal pairs have clean punctured neighborhoods", false, false,
     check_pair_structure},
    {"5.1", "MIS complements are MIS of the conjugate", true, false,
     check_conjugate_complements},
    {"5.2", "MIS and complement weights sum to the total, reversing order", true, false,
     check_complement_weight_identity},
    {"duality", "maximum on the graph pairs with minimum on the conjugate", true, false,
     check_duality},
    {"gap", "max-min weight gap is bounded by the pair weight spread", true, false,
     check_gap_bound},
};

} // namespace

const std::vector<std::string>& known_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& c : kChecks)
            v.emplace_back(c.id);
        return v;
    }();
    return ids;
}

VerificationReport verify(const GraphDocument& doc, const std::vector<std::string>& scope,
                          bool override_guard) {
    for (const auto& id : scope)
        if (std::find(known_check_ids().begin(), known_check_ids().end(), id) ==
            known_check_ids().end())
            throw std::invalid_argument("unknown check id '" + id + "'");

    auto selected = [&](const char* id) {
        return scope.empty() ||
               std::find(scope.begin(), scope.end(), std::string(id)) != scope.end();
    };

    Instance in{doc.graph,
                enumerate_mis(doc.graph, override_guard),
                twin_classes(doc.graph),
                orthogonal_pairs(doc.graph),
                find_pairing(doc.graph)};

    VerificationReport report;
    for (const auto& entry : kChecks) {
        if (!selected(entry.id))
            continue;
        CheckResult result;
        result.id = entry.id;
        result.name = entry.name;
        if (entry.needs_pairing && !in.pairing) {
            result.status = CheckResult::Status::skipped;
            result.detail = "no perfect orthogonal pairing exists";
        } else if (entry.needs_trivial && !is_trivial(in.g, *in.pairing)) {
            result.status = CheckResult::Status::skipped;
            result.detail = "pairing is not trivial (unequal pair weights)";
        } else if (Detail failure = entry.run(in)) {
            result.status = CheckResult::Status::fail;
            result.detail = *failure;
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace miskit
