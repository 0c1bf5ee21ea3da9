#pragma once

#include "miskit/io.hpp"

#include <cstdint>
#include <random>

namespace miskit {

/// mt19937_64 with hand-rolled draws. The engine's output sequence is fixed
/// by the standard; the standard distributions are not, so bounded draws are
/// done here to keep documents identical across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound >= 1; rejection sampling avoids modulo bias.
    std::uint64_t next_below(std::uint64_t bound);

    /// True with probability p (53-bit resolution).
    bool bernoulli(double p);

private:
    std::mt19937_64 engine_;
};

enum class GenKind { random, moon_moser, twin_ortho, trivial_twin_ortho };

struct GenParams {
    int n = 0;                    // vertex count (base-graph size for the twin-ortho kinds)
    double edge_probability = 0.5; // random kind only
    Weight weight_min = 0;
    Weight weight_max = 9;
};

/// Deterministic for a fixed (kind, params, seed).
///   random:             Erdos-Renyi edges, weights uniform in [weight_min, weight_max]
///   moon-moser:         disjoint unit-weight triangles (n divisible by 3)
///   twin-ortho:         random base graph, normalized, embedded with pendants;
///                       originals get random weights, pendants stay 0
///   trivial-twin-ortho: same, but every vertex's weight is copied to its partner
GraphDocument generate(GenKind kind, const GenParams& params, std::uint64_t seed);

GenKind gen_kind_from_string(const std::string& name);
std::string to_string(GenKind kind);

} // namespace miskit
