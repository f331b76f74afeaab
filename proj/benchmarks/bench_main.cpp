#include <string>

#include <benchmark/benchmark.h>

#include "toradd/analysis.hpp"
#include "toradd/fan_file.hpp"

using namespace toradd;

namespace {

FanFile fixture(const std::string& name) {
  return load_fan_file(std::string(TORADD_FIXTURE_DIR) + "/" + name + ".json");
}

const char* const kNames[] = {"p2", "wp123", "wp1112", "hirzebruch_3", "final_family_n5"};

void BM_EnumerateRoots(benchmark::State& state) {
  const RaySystem rs(fixture(kNames[state.range(0)]).rays);
  const auto s = detect_additive_structure(rs);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(rs, s));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_EnumerateRoots)->DenseRange(0, 4);

void BM_BruteForceRoots(benchmark::State& state) {
  const RaySystem rs(fixture(kNames[state.range(0)]).rays);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_roots(rs, 5));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_BruteForceRoots)->DenseRange(0, 4);

void BM_Analyze(benchmark::State& state) {
  const FanFile ff = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(ff));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Analyze)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
