// Compares the serial reference paths against the OpenMP kernels: the
// branch-and-bound solver with split top-level subtrees, and the orthogonal
// pair scan. Results must agree; only the timings differ.

#include "miskit/generate.hpp"
#include "miskit/orthogonal.hpp"
#include "miskit/solve.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_solve(int n, double p, std::uint64_t seed) {
    miskit::GenParams params;
    params.n = n;
    params.edge_probability = p;
    params.weight_min = 0;
    params.weight_max = 99;
    auto doc = miskit::generate(miskit::GenKind::random, params, seed);

    miskit::SolveOptions serial;
    serial.method = miskit::SolveMethod::branch_and_bound;
    miskit::SolveOptions parallel = serial;
    parallel.parallel = true;

    auto t0 = std::chrono::steady_clock::now();
    auto rs = miskit::solve_max(doc.graph, serial);
    double ts = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    auto rp = miskit::solve_max(doc.graph, parallel);
    double tp = seconds_since(t1);

    bool same = rs.weight == rp.weight && rs.set == rp.set;
    std::printf("solve   n=%-4d seed=%-3llu serial %8.4fs  parallel %8.4fs  speedup %5.2fx  %s\n",
                n, static_cast<unsigned long long>(seed), ts, tp, ts / (tp > 0 ? tp : 1e-9),
                same ? "identical" : "MISMATCH");
}

void bench_pairs(int n, double p, std::uint64_t seed) {
    miskit::GenParams params;
    params.n = n;
    params.edge_probability = p;
    params.weight_min = 1;
    params.weight_max = 1;
    auto doc = miskit::generate(miskit::GenKind::random, params, seed);

    auto t0 = std::chrono::steady_clock::now();
    auto serial = miskit::orthogonal_pairs(doc.graph);
    double ts = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    auto parallel = miskit::orthogonal_pairs_parallel(doc.graph);
    double tp = seconds_since(t1);

    std::printf("pairs   n=%-4d seed=%-3llu serial %8.4fs  parallel %8.4fs  speedup %5.2fx  %s\n",
                n, static_cast<unsigned long long>(seed), ts, tp, ts / (tp > 0 ? tp : 1e-9),
                serial == parallel ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int solve_n = 72;
    int pairs_n = 4000;
    if (argc > 1)
        solve_n = std::stoi(argv[1]);
    if (argc > 2)
        pairs_n = std::stoi(argv[2]);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    for (std::uint64_t seed = 1; seed <= 3; ++seed)
        bench_solve(solve_n, 0.1, seed);
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
        bench_pairs(pairs_n, 0.5, seed);
    return 0;
}
