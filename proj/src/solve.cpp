#include "miskit/solve.hpp"

#include "miskit/normalize.hpp"

#include <atomic>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace miskit {

namespace {

/// Per-vertex complements of the closed neighborhood: the candidates that
/// stay eligible after choosing v. A maximal independent set of g is exactly
/// a maximal clique of the complement graph, so the recursion below is the
/// classic three-set scheme run on these masks.
std::vector<VertexSet> eligibility_masks(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> masks;
    masks.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        VertexSet m = g.neighbors(v).complement();
        m.remove(v);
        masks.push_back(std::move(m));
    }
    return masks;
}

struct Enumerator {
    const std::vector<VertexSet>& eligible;
    const std::function<bool(const VertexSet&)>& emit;
    SolveStats& stats;
    bool stopped = false;

    void recurse(VertexSet& chosen, VertexSet candidates, VertexSet excluded) {
        ++stats.nodes;
        if (candidates.empty() && excluded.empty()) {
            ++stats.sets;
            if (!emit(chosen))
                stopped = true;
            return;
        }
        // An excluded vertex compatible with every candidate makes the whole
        // branch fruitless: it could always still be added.
        for (int x = excluded.first(); x >= 0; x = excluded.next(x))
            if (candidates.is_subset_of(eligible[static_cast<std::size_t>(x)]))
                return;
        for (int v = candidates.first(); v >= 0 && !stopped; v = candidates.next(v)) {
            chosen.add(v);
            recurse(chosen, candidates & eligible[static_cast<std::size_t>(v)],
                    excluded & eligible[static_cast<std::size_t>(v)]);
            chosen.remove(v);
            candidates.remove(v);
            excluded.add(v);
        }
    }
};

void check_guard(const WeightedGraph& g, bool override_guard) {
    if (!override_guard && g.vertex_count() > kEnumerationGuard)
        throw capacity_error("enumeration refused for " + std::to_string(g.vertex_count()) +
                             " vertices (guard is " + std::to_string(kEnumerationGuard) +
                             "); pass the override to proceed");
}

} // namespace

void enumerate_mis(const WeightedGraph& g, const std::function<bool(const VertexSet&)>& emit,
                   bool override_guard, SolveStats* stats) {
    check_guard(g, override_guard);
    SolveStats local;
    SolveStats& s = stats ? *stats : local;
    auto masks = eligibility_masks(g);
    Enumerator e{masks, emit, s};
    const int n = g.vertex_count();
    VertexSet chosen(n);
    e.recurse(chosen, VertexSet::full(n), VertexSet(n));
}

std::vector<VertexSet> enumerate_mis(const WeightedGraph& g, bool override_guard) {
    std::vector<VertexSet> out;
    enumerate_mis(
        g,
        [&](const VertexSet& s) {
            out.push_back(s);
            return true;
        },
        override_guard);
    return out;
}

std::uint64_t mis_count_bound(int n) {
    if (n <= 0)
        throw std::invalid_argument("bound is defined for positive vertex counts");
    if (n == 1)
        return 1;
    if (n == 2)
        return 2;
    const int s = n % 3;
    const int r = n / 3; // n = 3r + s with r >= 1 here
    std::uint64_t bound = (s == 0) ? 3 : (s == 1) ? 4 : 6;
    for (int i = 0; i < r - 1; ++i) {
        if (bound > UINT64_MAX / 3)
            throw std::overflow_error("bound exceeds 64 bits");
        bound *= 3;
    }
    return bound;
}

namespace {

/// Shared weight bound for parallel workers. Only strict comparisons against
/// it are used for pruning, so late updates never change the canonical
/// result.
struct SharedBound {
    std::atomic<Weight> value;
    Direction direction;

    explicit SharedBound(Direction d)
        : value(d == Direction::max ? 0 : ~Weight{0}), direction(d) {}

    void offer(Weight w) {
        Weight cur = value.load(std::memory_order_relaxed);
        if (direction == Direction::max) {
            while (w > cur && !value.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
            }
        } else {
            while (w < cur && !value.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
            }
        }
    }
};

/// Branch-and-bound over the same lexicographic recursion tree as the
/// enumerator. Within one search the first optimum found is the
/// lexicographically smallest, so equal-weight subtrees can be pruned.
struct BoundedSearch {
    const WeightedGraph& g;
    const std::vector<VertexSet>& eligible;
    Direction direction;
    bool prune; // false = plain enumeration scan
    SharedBound* shared;

    bool have_best = false;
    VertexSet best_set;
    Weight best_weight = 0;
    SolveStats stats;

    BoundedSearch(const WeightedGraph& graph, const std::vector<VertexSet>& masks,
                  Direction dir, bool prune_, SharedBound* shared_ = nullptr)
        : g(graph), eligible(masks), direction(dir), prune(prune_), shared(shared_) {}

    Weight remaining_weight(const VertexSet& candidates) const {
        Weight w = 0;
        for (int v = candidates.first(); v >= 0; v = candidates.next(v))
            w += g.weight(v); // total graph weight fits, so no overflow
        return w;
    }

    void offer(const VertexSet& chosen, Weight chosen_weight) {
        ++stats.sets;
        bool better = !have_best || (direction == Direction::max ? chosen_weight > best_weight
                                                                 : chosen_weight < best_weight);
        if (better) {
            have_best = true;
            best_set = chosen;
            best_weight = chosen_weight;
            if (shared)
                shared->offer(chosen_weight);
        }
    }

    bool can_prune(const VertexSet& candidates, Weight chosen_weight) const {
        if (!prune)
            return false;
        if (direction == Direction::max) {
            Weight ub = chosen_weight + remaining_weight(candidates);
            if (have_best && ub <= best_weight)
                return true;
            if (shared && ub < shared->value.load(std::memory_order_relaxed))
                return true;
        } else {
            if (have_best && chosen_weight >= best_weight)
                return true;
            if (shared && chosen_weight > shared->value.load(std::memory_order_relaxed))
                return true;
        }
        return false;
    }

    void recurse(VertexSet& chosen, Weight chosen_weight, VertexSet candidates,
                 VertexSet excluded) {
        ++stats.nodes;
        if (candidates.empty() && excluded.empty()) {
            offer(chosen, chosen_weight);
            return;
        }
        if (can_prune(candidates, chosen_weight))
            return;
        for (int x = excluded.first(); x >= 0; x = excluded.next(x))
            if (candidates.is_subset_of(eligible[static_cast<std::size_t>(x)]))
                return;
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            chosen.add(v);
            recurse(chosen, chosen_weight + g.weight(v),
                    candidates & eligible[static_cast<std::size_t>(v)],
                    excluded & eligible[static_cast<std::size_t>(v)]);
            chosen.remove(v);
            candidates.remove(v);
            excluded.add(v);
            if (can_prune(candidates, chosen_weight))
                return;
        }
    }
};

SolveResult solve_serial(const WeightedGraph& g, Direction direction, bool prune,
                         bool override_guard) {
    if (!prune)
        check_guard(g, override_guard);
    auto masks = eligibility_masks(g);
    BoundedSearch search{g, masks, direction, prune};
    const int n = g.vertex_count();
    VertexSet chosen(n);
    search.recurse(chosen, 0, VertexSet::full(n), VertexSet(n));

    SolveResult result;
    result.set = search.have_best ? search.best_set : VertexSet(n);
    result.weight = search.best_weight;
    result.direction = direction;
    result.stats = search.stats;
    return result;
}

/// Top-level branches are explored by separate workers; branch k covers the
/// sets whose smallest member is the k-th root candidate, so merging branch
/// results in index order reproduces the serial tie-break exactly.
SolveResult solve_parallel(const WeightedGraph& g, Direction direction) {
    const int n = g.vertex_count();
    auto masks = eligibility_masks(g);

    struct Branch {
        int v;
        VertexSet candidates;
        VertexSet excluded;
    };
    std::vector<Branch> branches;
    {
        VertexSet candidates = VertexSet::full(n);
        VertexSet excluded(n);
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            branches.push_back({v, candidates & masks[static_cast<std::size_t>(v)],
                                excluded & masks[static_cast<std::size_t>(v)]});
            candidates.remove(v);
            excluded.add(v);
        }
    }

    SharedBound shared(direction);
    std::vector<BoundedSearch> searches;
    searches.reserve(branches.size());
    for (std::size_t i = 0; i < branches.size(); ++i)
        searches.emplace_back(g, masks, direction, true, &shared);

    const int branch_count = static_cast<int>(branches.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < branch_count; ++i) {
        auto& b = branches[static_cast<std::size_t>(i)];
        VertexSet chosen(n);
        chosen.add(b.v);
        searches[static_cast<std::size_t>(i)].recurse(chosen, g.weight(b.v), b.candidates,
                                                      b.excluded);
    }

    SolveResult result;
    result.set = VertexSet(n);
    result.direction = direction;
    bool have = false;
    for (auto& s : searches) {
        result.stats.nodes += s.stats.nodes;
        result.stats.sets += s.stats.sets;
        if (!s.have_best)
            continue;
        bool better = !have || (direction == Direction::max ? s.best_weight > result.weight
                                                            : s.best_weight < result.weight);
        if (better) {
            have = true;
            result.set = s.best_set;
            result.weight = s.best_weight;
        }
    }
    return result;
}

} // namespace

SolveResult solve(const WeightedGraph& g, Direction direction, const SolveOptions& options) {
    auto start = std::chrono::steady_clock::now();

    bool prune;
    switch (options.method) {
    case SolveMethod::enumerate:
        prune = false;
        break;
    case SolveMethod::branch_and_bound:
        prune = true;
        break;
    case SolveMethod::automatic:
    default:
        prune = g.vertex_count() >= 12;
        break;
    }

    SolveResult result;
    if (options.parallel && prune && g.vertex_count() > 0)
        result = solve_parallel(g, direction);
    else
        result = solve_serial(g, direction, prune, options.override_guard);

    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SolveResult solve_max(const WeightedGraph& g, const SolveOptions& options) {
    return solve(g, Direction::max, options);
}

SolveResult solve_min(const WeightedGraph& g, const SolveOptions& options) {
    return solve(g, Direction::min, options);
}

SolveResult solve_via_reduction(const WeightedGraph& g, EmbedMode mode,
                                const SolveOptions& options) {
    auto start = std::chrono::steady_clock::now();

    NormalizationMap nm = normalize(g);
    EmbeddingInfo info = embed(nm.quotient, mode);
    SolveResult embedded = solve_max(info.embedded, options);

    VertexSet quotient_set = project(info, embedded.set);
    VertexSet lifted = lift_set(nm, quotient_set);

    SolveResult result;
    result.set = lifted;
    result.weight = weight_of(g, lifted);
    result.direction = Direction::max;
    result.stats = embedded.stats;
    result.stats.source_vertices = g.vertex_count();
    result.stats.quotient_vertices = nm.quotient.vertex_count();
    result.stats.embedded_vertices = info.embedded.vertex_count();
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace miskit
