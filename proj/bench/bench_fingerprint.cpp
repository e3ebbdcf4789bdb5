// Serial reference vs OpenMP trace kernel on representative tuple shapes.
// Run: ./bench/syminv_bench  (SYMINV_THREADS caps the worker count)

#include <benchmark/benchmark.h>

#include "syminv/procesi.hpp"
#include "syminv/symbols.hpp"

using namespace syminv;

namespace {

std::vector<KForm> monomial_kforms(long nf) {
  std::vector<KForm> qs;
  for (long j = 0; j < nf; ++j) {
    KForm q(size_t(nf), Rat(0));
    q[size_t(j)] = 1;
    qs.push_back(std::move(q));
  }
  return qs;
}

OperatorTuple tuple_for(Mode mode, int m, std::uint64_t seed) {
  const SymbolTensor s = random_symbol(2, 2, m, DualKind::star, mode, seed);
  return build_tuple(s, monomial_kforms(s.N()), mode);
}

void bench_serial(benchmark::State& state, Mode mode, int m, int cap) {
  const OperatorTuple t = tuple_for(mode, m, 1);
  const auto words = enumerate_words(int(t.ops.size()), cap);
  for (auto _ : state) {
    auto traces = trace_all_serial(t, words);
    benchmark::DoNotOptimize(traces);
  }
  state.counters["words"] = double(words.size());
}

void bench_parallel(benchmark::State& state, Mode mode, int m, int cap) {
  const OperatorTuple t = tuple_for(mode, m, 1);
  const auto words = enumerate_words(int(t.ops.size()), cap);
  for (auto _ : state) {
    auto traces = trace_all(t, words);
    benchmark::DoNotOptimize(traces);
  }
  state.counters["words"] = double(words.size());
}

}  // namespace

BENCHMARK_CAPTURE(bench_serial, general_m2_cap3, Mode::general, 2, 3);
BENCHMARK_CAPTURE(bench_parallel, general_m2_cap3, Mode::general, 2, 3);
BENCHMARK_CAPTURE(bench_serial, general_m3_cap5, Mode::general, 3, 5);
BENCHMARK_CAPTURE(bench_parallel, general_m3_cap5, Mode::general, 3, 5);
BENCHMARK_CAPTURE(bench_serial, skew_m4_cap5, Mode::skew, 4, 5);
BENCHMARK_CAPTURE(bench_parallel, skew_m4_cap5, Mode::skew, 4, 5);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
