// Serial reference against the OpenMP candidate loop on fixed trial
// complexes. Arguments: ambient dimension, worker threads.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "pht/harness.hpp"
#include "pht/higher.hpp"

namespace {

pht::SimplicialComplex bench_complex(std::size_t d) {
  auto config = pht::trial_config(2024, 0, false);
  config.ambient_dim = d;
  config.vertex_count = 10;
  config.max_dim = static_cast<int>(std::min<std::size_t>(3, d - 1));
  return pht::generate_complex(config);
}

void BM_Reconstruct(benchmark::State& state) {
  const auto K = bench_complex(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  std::size_t queries = 0;
  for (auto _ : state) {
    pht::ComplexOracle oracle(K, 0);
    auto r = pht::reconstruct(oracle, {threads, false});
    queries = r.stats.total_queries();
    benchmark::DoNotOptimize(r);
  }
  state.counters["simplices"] = static_cast<double>(K.size());
  state.counters["queries"] = static_cast<double>(queries);
}

void Args(benchmark::internal::Benchmark* b) {
  const int max_threads = std::max(2, omp_get_max_threads());
  for (int d : {3, 4, 5}) {
    b->Args({d, 1});
    b->Args({d, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_Reconstruct)->Apply(Args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
