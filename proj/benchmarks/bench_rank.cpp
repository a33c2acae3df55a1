#include <benchmark/benchmark.h>

#include "jetquiver/diffop.hpp"
#include "jetquiver/jetbundles.hpp"
#include "jetquiver/quiver.hpp"

using namespace jetquiver;

namespace {

void BM_truncation_matrix_build(benchmark::State& state) {
  for (auto _ : state) {
    RationalMatrix M = truncation_matrix(2, 6, 3, 1);
    benchmark::DoNotOptimize(M);
  }
}
BENCHMARK(BM_truncation_matrix_build);

void BM_rank_exact_100x63(benchmark::State& state) {
  RationalMatrix M = truncation_matrix(2, 6, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(M));
}
BENCHMARK(BM_rank_exact_100x63);

void BM_rank_exact_336x280(benchmark::State& state) {
  RationalMatrix M = truncation_matrix(2, 10, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(M));
}
BENCHMARK(BM_rank_exact_336x280);

void BM_rank_mod_p_1120x1225(benchmark::State& state) {
  RationalMatrix M = truncation_matrix(3, 8, 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(M, 2305843009213693951ull));
}
BENCHMARK(BM_rank_mod_p_1120x1225);

void BM_certified_rank_modular(benchmark::State& state) {
  RationalMatrix M = truncation_matrix(3, 8, 5, 4);
  for (auto _ : state) {
    RankCertificate c = certified_rank(M);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_certified_rank_modular);

void BM_fiber_rank(benchmark::State& state) {
  std::vector<Rat> p = {Rat(3), Rat(-2), Rat(5, 2), Rat(1)};
  RationalMatrix F = fiber_matrix(3, 5, 3, p);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(F));
}
BENCHMARK(BM_fiber_rank);

void BM_truncation_rank_grid_point(benchmark::State& state) {
  for (auto _ : state) {
    TruncationReport r = truncation_rank(2, 8, 4, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_truncation_rank_grid_point);

void BM_schur_dim(benchmark::State& state) {
  Partition lambda({8, 6, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(schur_dim(lambda, 6));
}
BENCHMARK(BM_schur_dim);

void BM_horizontal_strips(benchmark::State& state) {
  Partition mu({5, 4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(horizontal_strips(mu, 5));
}
BENCHMARK(BM_horizontal_strips);

void BM_verify_lemma(benchmark::State& state) {
  LaurentCombo f = LaurentCombo::monomial(MultiIndex{{2, -3, 4}}, Rat(5, 3));
  for (auto _ : state) {
    LemmaReport r = verify_lemma(2, 4, f);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_verify_lemma);

void BM_stability(benchmark::State& state) {
  for (auto _ : state) {
    StabilityVerdict v = stability_Q(3, 5, 2);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_stability);

}  // namespace

BENCHMARK_MAIN();
