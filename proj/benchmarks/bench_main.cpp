#include <benchmark/benchmark.h>

#include "macroq/catalog.hpp"
#include "macroq/grover.hpp"
#include "macroq/linalg.hpp"
#include "macroq/vcm.hpp"

using namespace macroq;

static void BM_VcmMatrix(benchmark::State& state) {
  const PureState psi = haar_random_state(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(vcm_matrix(psi));
}
BENCHMARK(BM_VcmMatrix)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_ComputeVcm(benchmark::State& state) {
  const PureState psi = random_product_state(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_vcm(psi).e_max);
}
BENCHMARK(BM_ComputeVcm)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_HadamardTransform(benchmark::State& state) {
  PureState psi(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    hadamard_transform(psi);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_HadamardTransform)->DenseRange(12, 20, 4)->Unit(benchmark::kMicrosecond);

static void BM_GroverIteration(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto inst = build_instance(L, {3});
  PureState psi(L);
  hadamard_transform(psi);
  for (auto _ : state) {
    grover_iteration(psi, inst);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_GroverIteration)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_JacobiEigen(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const CMatrix v = vcm_matrix(haar_random_state(L, 2));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(v).values);
}
BENCHMARK(BM_JacobiEigen)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const PureState psi = haar_random_state(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max_fluctuation(psi).best);
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
