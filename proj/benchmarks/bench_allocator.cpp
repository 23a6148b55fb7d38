#include <benchmark/benchmark.h>

#include <random>

#include "airtime/baselines.hpp"
#include "airtime/gnbs.hpp"
#include "random_problem.hpp"

namespace {

using airtime::testing::RandomProblemOptions;
using airtime::testing::UtilityMix;

airtime::BargainingProblem make(std::size_t players, UtilityMix mix) {
  std::mt19937_64 rng(players * 7919 + static_cast<int>(mix));
  RandomProblemOptions opt;
  opt.min_players = opt.max_players = players;
  opt.utilities = mix;
  return airtime::testing::random_problem(rng, opt);
}

void BM_GnbsLinear(benchmark::State& state) {
  const auto problem = make(static_cast<std::size_t>(state.range(0)), UtilityMix::linear_only);
  for (auto _ : state) benchmark::DoNotOptimize(airtime::gnbs_allocate(problem));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GnbsLinear)->RangeMultiplier(4)->Range(2, 512)->Complexity();

void BM_GnbsMixed(benchmark::State& state) {
  const auto problem = make(static_cast<std::size_t>(state.range(0)), UtilityMix::all);
  for (auto _ : state) benchmark::DoNotOptimize(airtime::gnbs_allocate(problem));
}
BENCHMARK(BM_GnbsMixed)->RangeMultiplier(4)->Range(2, 512);

void BM_Eql(benchmark::State& state) {
  const auto problem = make(static_cast<std::size_t>(state.range(0)), UtilityMix::linear_only);
  for (auto _ : state) benchmark::DoNotOptimize(airtime::eql_allocate(problem));
}
BENCHMARK(BM_Eql)->RangeMultiplier(4)->Range(2, 512);

}  // namespace

BENCHMARK_MAIN();
