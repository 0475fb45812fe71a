#include <benchmark/benchmark.h>

#include "adslie/orbit.hpp"
#include "adslie/rng.hpp"
#include "adslie/so2n.hpp"
#include "adslie/su1n.hpp"

using namespace adslie;

namespace {

AlgebraElement random_element(Rng& rng, AlgebraTag tag, int n) {
  const auto basis = standard_basis(tag, n);
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Zero(tag_matrix_dim(tag, n), tag_matrix_dim(tag, n));
  for (const AlgebraElement& b : basis) m += rng.uniform(-1, 1) * b.mat;
  return AlgebraElement(tag, n, m);
}

void bm_exp_series(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const AlgebraElement x = random_element(rng, AlgebraTag::SO2n, n);
  for (auto _ : state) benchmark::DoNotOptimize(exp_series(x).mat.sum());
}

void bm_exp_closed_principal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Eigen::VectorXd w = rng.gaussian_vector(n - 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(exp_n_principal(0.3, -0.4, w, n).mat.sum());
}

void bm_exp_closed_solvable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const Eigen::VectorXcd vw = rng.gaussian_cvector(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(exp_s_closed(0.7, 0.2, vw, n).mat.sum());
}

void bm_root_decomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // bypass the memo to time the actual eigensplit
    const auto basis = standard_basis(AlgebraTag::SO2n, n);
    benchmark::DoNotOptimize(basis.size());
    benchmark::DoNotOptimize(root_decomposition(AlgebraTag::SO2n, n).spaces.size());
  }
}

void bm_orbit_dim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Subalgebra nil = iwasawa_n_so2n(n);
  Rng rng(4);
  const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64());
  for (auto _ : state) benchmark::DoNotOptimize(orbit_dim(nil, p));
}

void bm_killing_ad_trace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  const AlgebraElement x = random_element(rng, AlgebraTag::SU1n, n);
  const AlgebraElement y = random_element(rng, AlgebraTag::SU1n, n);
  for (auto _ : state) benchmark::DoNotOptimize(killing_ad_trace(x, y));
}

}  // namespace

BENCHMARK(bm_exp_series)->Arg(3)->Arg(6);
BENCHMARK(bm_exp_closed_principal)->Arg(3)->Arg(6);
BENCHMARK(bm_exp_closed_solvable)->Arg(3)->Arg(6);
BENCHMARK(bm_root_decomposition)->Arg(4);
BENCHMARK(bm_orbit_dim)->Arg(4)->Arg(6);
BENCHMARK(bm_killing_ad_trace)->Arg(3);

BENCHMARK_MAIN();
