// Compares the serial reference paths against the production kernels:
//   - acf_direct (literal summation) vs acf_fast (xor/popcount words)
//   - plain enumeration vs pruned both-ends search (node counts and time)
//   - verification scan with one worker vs all cores
// Run after building: ./build/bench/barker_bench

#include <omp.h>

#include <cstdint>
#include <cstdio>

#include "barker/correlation.hpp"
#include "barker/search.hpp"
#include "barker/sequence.hpp"
#include "barker/verify.hpp"

using barker::BinarySequence;

namespace {

volatile std::int64_t g_sink = 0;

void bench_kernels() {
  std::printf("correlation kernel (per full profile)\n");
  std::printf("  %6s %14s %14s %9s\n", "n", "direct", "bit-parallel", "speedup");
  for (int n : {64, 256, 1024}) {
    BinarySequence a = barker::random_sequence(1, n, 0);
    int reps = 200000000 / (n * n) + 1;

    double t0 = omp_get_wtime();
    std::int64_t sink = 0;
    for (int r = 0; r < reps; ++r) sink += barker::acf_direct(a).values.back();
    double direct = (omp_get_wtime() - t0) / reps;

    t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) sink += barker::acf_fast(a).values.back();
    double fast = (omp_get_wtime() - t0) / reps;
    g_sink = g_sink + sink;

    std::printf("  %6d %11.2f us %11.2f us %8.1fx\n", n, direct * 1e6, fast * 1e6,
                direct / fast);
  }
}

void bench_search() {
  std::printf("\nbarker search (both-ends pruning vs plain enumeration)\n");
  std::printf("  %6s %16s %12s %16s %12s %9s\n", "n", "pruned nodes", "time", "plain nodes",
              "time", "speedup");
  int workers = omp_get_max_threads();
  for (int n : {16, 18, 20, 22}) {
    barker::SearchConfig pruned;
    pruned.n = n;
    pruned.workers = workers;
    barker::SearchResult p = barker::search_barker(pruned);

    barker::SearchConfig plain = pruned;
    plain.prune = false;
    barker::SearchResult e = barker::search_barker(plain);

    std::printf("  %6d %16llu %10.3fs %16llu %10.3fs %8.1fx\n", n,
                static_cast<unsigned long long>(p.nodes_visited), p.elapsed.count(),
                static_cast<unsigned long long>(e.nodes_visited), e.elapsed.count(),
                e.elapsed.count() / p.elapsed.count());
  }
  std::printf("  pruned only:\n");
  for (int n : {24, 26, 28, 30, 32}) {
    barker::SearchConfig cfg;
    cfg.n = n;
    cfg.workers = workers;
    barker::SearchResult r = barker::search_barker(cfg);
    std::printf("  %6d %16llu %10.3fs   found=%zu\n", n,
                static_cast<unsigned long long>(r.nodes_visited), r.elapsed.count(),
                r.sequences.size());
  }
}

void bench_verify() {
  std::printf("\nverification scan (lemma3, exhaustive n=2..16)\n");
  for (int workers : {1, omp_get_max_threads()}) {
    barker::EngineOptions opts;
    opts.workers = workers;
    double t0 = omp_get_wtime();
    barker::VerificationReport r =
        barker::verify_identity("lemma3", 2, 16, barker::VerifyMode::exhaustive(), opts);
    double t = omp_get_wtime() - t0;
    std::printf("  workers=%-2d  checked=%llu  %.3fs\n", workers,
                static_cast<unsigned long long>(r.checked), t);
  }
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  bench_kernels();
  bench_search();
  bench_verify();
  return 0;
}
