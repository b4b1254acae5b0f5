// Serial reference vs OpenMP for each batch kernel.

#include "gamma02/kernels.hpp"
#include "gamma02/subgroups.hpp"

#include <benchmark/benchmark.h>

using namespace gamma02;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Enumerate(benchmark::State& state) {
  const LevelContext ctx(static_cast<std::int64_t>(state.range(1)));
  for (auto _ : state) {
    KnowledgeBase kb = seed_kb(ctx);
    benchmark::DoNotOptimize(enumerate_certified_L(kb, 9, exec_of(state)));
  }
}

void BM_ArtinSurvey(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::artin_survey(state.range(1), 5000, std::uint64_t{1} << 32, exec_of(state)));
  }
}

void BM_CharacterSweep(benchmark::State& state) {
  const LevelContext ctx(static_cast<std::int64_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::character_agreement_sweep(ctx, 50, exec_of(state)));
  }
}

void BM_HeckeSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::hecke_conjugation_sweep(state.range(1), exec_of(state)));
  }
}

}  // namespace

// First argument: 0 serial, 1 OpenMP.
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1}, {7, 29}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArtinSurvey)->ArgsProduct({{0, 1}, {15}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterSweep)->ArgsProduct({{0, 1}, {15}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeSweep)->ArgsProduct({{0, 1}, {999}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
