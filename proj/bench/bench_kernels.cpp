#include <benchmark/benchmark.h>

#include <numeric>

#include "ringsynth/kernels.hpp"
#include "ringsynth/random.hpp"

using namespace ringsynth;

namespace {

RingMatrix sample(int n, std::uint64_t seed) { return random_matrix(GateSetTag::SUPGAUSS, n, 40, seed); }

void BM_MultiplySerial(benchmark::State& st) {
  auto a = sample(st.range(0), 1), b = sample(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_MultiplyParallel(benchmark::State& st) {
  auto a = sample(st.range(0), 1), b = sample(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}

void evaluate_bench(benchmark::State& st, bool parallel) {
  int n = st.range(0);
  Circuit c = random_circuit(GateSetTag::SUPGAUSS, n, 200, 3);
  std::vector<size_t> cols(size_t{1} << n);
  std::iota(cols.begin(), cols.end(), 0);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_columns(c, cols, parallel));
}

void BM_EvaluateSerial(benchmark::State& st) { evaluate_bench(st, false); }
void BM_EvaluateParallel(benchmark::State& st) { evaluate_bench(st, true); }

void BM_EvaluateReference(benchmark::State& st) {
  Circuit c = random_circuit(GateSetTag::SUPGAUSS, st.range(0), 200, 3);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_full_reference(c));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->DenseRange(3, 5);
BENCHMARK(BM_MultiplyParallel)->DenseRange(3, 5);
BENCHMARK(BM_EvaluateSerial)->DenseRange(3, 6);
BENCHMARK(BM_EvaluateParallel)->DenseRange(3, 6);
BENCHMARK(BM_EvaluateReference)->DenseRange(3, 4);

BENCHMARK_MAIN();
