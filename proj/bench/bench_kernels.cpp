// Serial reference vs OpenMP kernels.
#include <memory>

#include <benchmark/benchmark.h>

#include "scor/objectives.hpp"
#include "scor/optimizer.hpp"
#include "scor/simgen.hpp"
#include "scor/sphere_geometry.hpp"

using namespace scor;

namespace {

std::shared_ptr<const MulticlassSample> sample(std::size_t d, std::size_t n, std::size_t M = 2) {
  const ScenarioSpec spec{.num_classes = M, .dimension = d, .n_per_class = std::vector<std::size_t>(M, n), .seed = 1};
  return std::make_shared<const MulticlassSample>(generate(spec));
}

void scor_fit(benchmark::State& state, bool parallel) {
  const std::size_t d = state.range(0);
  const Objective f = make_objective(Criterion::Ehum, sample(d, 200));
  ScorConfig c;
  c.parallel_eval = parallel;
  c.keep_trace = false;
  c.max_runs = 2;
  for (auto _ : state) benchmark::DoNotOptimize(scor_maximize(f, UnitVector::uniform(d), c).objective_value);
}

void BM_ScorSerial(benchmark::State& state) { scor_fit(state, false); }
void BM_ScorOpenMP(benchmark::State& state) { scor_fit(state, true); }

void BM_EhumSweep(benchmark::State& state) {
  const auto s = sample(5, state.range(0), 3);
  const ScoreSet scores_ = scores(UnitVector::uniform(5).coords(), *s);
  for (auto _ : state) benchmark::DoNotOptimize(ehum_count(scores_).ordered);
}

void BM_EhumBruteForce(benchmark::State& state) {
  const auto s = sample(5, state.range(0), 3);
  const ScoreSet scores_ = scores(UnitVector::uniform(5).coords(), *s);
  for (auto _ : state) benchmark::DoNotOptimize(ehum_count_brute_force(scores_).ordered);
}

void BM_GenerateCandidates(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const UnitVector b = UnitVector::uniform(d);
  for (auto _ : state) benchmark::DoNotOptimize(generate_candidates(b, 0.1, 0.0, 2.0, 1e-6).size());
}

}  // namespace

BENCHMARK(BM_ScorSerial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScorOpenMP)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EhumSweep)->Arg(10)->Arg(40)->Arg(100);
BENCHMARK(BM_EhumBruteForce)->Arg(10)->Arg(40)->Arg(100);
BENCHMARK(BM_GenerateCandidates)->Arg(5)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
