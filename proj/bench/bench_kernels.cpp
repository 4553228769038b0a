// OpenMP kernels against the serial reference implementations.

#include <benchmark/benchmark.h>

#include "resq/graph.hpp"
#include "resq/kernels.hpp"
#include "resq/resistance.hpp"

namespace {

using resq::DenseMatrix;
namespace k = resq::kernels;

// L + J of a random connected graph: SPD and the shape the library inverts.
DenseMatrix shifted_laplacian(std::size_t n) {
  const resq::Graph g = resq::random_connected_graph(n, 0.1, 42);
  DenseMatrix l = resq::laplacian(g);
  for (double& x : l.data()) x += 1.0;
  return l;
}

DenseMatrix resistance(std::size_t n) { return resq::resistance_matrix(resq::random_connected_graph(n, 0.1, 42)); }

void BM_matmul(benchmark::State& st) {
  const DenseMatrix a = resistance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::matmul(a, a));
}
void BM_matmul_serial(benchmark::State& st) {
  const DenseMatrix a = resistance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::matmul(a, a));
}

void BM_inverse(benchmark::State& st) {
  const DenseMatrix a = shifted_laplacian(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::spd_inverse(a));
}
void BM_inverse_serial(benchmark::State& st) {
  const DenseMatrix a = shifted_laplacian(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::inverse(a));
}

void BM_eigenvalues(benchmark::State& st) {
  const DenseMatrix a = resistance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::symmetric_eigenvalues(a));
}
void BM_eigenvalues_serial(benchmark::State& st) {
  const DenseMatrix a = resistance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::symmetric_eigenvalues(a));
}

void BM_resistance_from_pinv(benchmark::State& st) {
  const DenseMatrix p = *k::spd_inverse(shifted_laplacian(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(k::resistance_from_pinv(p));
}
void BM_resistance_from_pinv_serial(benchmark::State& st) {
  const DenseMatrix p = *k::spd_inverse(shifted_laplacian(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(k::serial::resistance_from_pinv(p));
}

}  // namespace

BENCHMARK(BM_matmul)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_serial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_inverse)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_inverse_serial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_eigenvalues)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_eigenvalues_serial)->RangeMultiplier(2)->Range(32, 128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_resistance_from_pinv)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_resistance_from_pinv_serial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
