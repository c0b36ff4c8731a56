#include <benchmark/benchmark.h>

#include "kbound/bounds.hpp"
#include "kbound/exact.hpp"
#include "kbound/named_graphs.hpp"
#include "kbound/spectral.hpp"

using namespace kbound;

namespace {

Graph sample(int n) { return graphs::random_connected(n, 0.2, 17 + n); }

void BM_Eigendecompose(benchmark::State& state) {
  const SymMatrix a = adjacency_matrix(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_GroupInverse(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  const SymMatrix l = laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(group_inverse_psd(l));
}
BENCHMARK(BM_GroupInverse)->RangeMultiplier(2)->Range(8, 64);

void BM_OptimalPolynomial(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_polynomial_bound(g, k, {}, {.diameter_shortcut = false}));
}
BENCHMARK(BM_OptimalPolynomial)->ArgsProduct({{10, 20, 40}, {1, 2, 3}});

void BM_LaplacianScan(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_kpower_bound(g, 2));
}
BENCHMARK(BM_LaplacianScan)->RangeMultiplier(2)->Range(8, 64);

void BM_ExactAlpha(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_alpha_k(g, 2));
}
BENCHMARK(BM_ExactAlpha)->DenseRange(16, 48, 16);

void BM_ExactChi(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi_k(g, 1));
}
BENCHMARK(BM_ExactChi)->DenseRange(12, 24, 6);

}  // namespace
BENCHMARK_MAIN();
