#include <benchmark/benchmark.h>

#include "magma/laws.hpp"

namespace {

// Serial vs fanned-out evaluation of the same deterministic case list.
void BM_law(benchmark::State& state, const char* law, int degree, int samples) {
  magma::VerifyConfig cfg;
  cfg.law = law;
  cfg.degree = degree;
  cfg.samples = samples;
  cfg.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    magma::LawReport r = magma::run_law(cfg);
    if (!r.pass) state.SkipWithError("law failed");
    benchmark::DoNotOptimize(r);
  }
}

void BM_rigidity(benchmark::State& state) { BM_law(state, "rigidity", 4, 1); }
void BM_conv_hom(benchmark::State& state) { BM_law(state, "conv-hom", 4, 8); }
void BM_compat(benchmark::State& state) { BM_law(state, "compat", 5, 1); }

}  // namespace

BENCHMARK(BM_rigidity)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv_hom)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compat)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
