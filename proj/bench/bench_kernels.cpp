// Serial against OpenMP kernels. Thread count follows BOHR_LAB_THREADS.

#include <benchmark/benchmark.h>

#include "bohr/kernels.hpp"
#include "bohr/verify.hpp"

namespace {

void BM_modulus_sup_serial(benchmark::State& state) {
  const auto model = bohr::sample_admissible_model(bohr::W0H{0.3}, 7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::kernels::modulus_sup_serial(model, 0.9, 720));
  }
  state.SetItemsProcessed(state.iterations() * 720 * state.range(0));
}

void BM_modulus_sup_parallel(benchmark::State& state) {
  const auto model = bohr::sample_admissible_model(bohr::W0H{0.3}, 7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::kernels::modulus_sup_parallel(model, 0.9, 720));
  }
  state.SetItemsProcessed(state.iterations() * 720 * state.range(0));
}

bohr::FuzzConfig fuzz_config(const benchmark::State& state) {
  bohr::FuzzConfig cfg;
  cfg.samples = static_cast<int>(state.range(0));
  return cfg;
}

void BM_fuzz_serial(benchmark::State& state) {
  const auto cfg = fuzz_config(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::fuzz_campaign_serial(bohr::T34{0.5}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}

void BM_fuzz_parallel(benchmark::State& state) {
  const auto cfg = fuzz_config(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::fuzz_campaign(bohr::T34{0.5}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}

}  // namespace

BENCHMARK(BM_modulus_sup_serial)->Arg(64)->Arg(512)->Arg(2000)->UseRealTime();
BENCHMARK(BM_modulus_sup_parallel)->Arg(64)->Arg(512)->Arg(2000)->UseRealTime();
BENCHMARK(BM_fuzz_serial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_fuzz_parallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
