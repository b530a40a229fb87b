#include <benchmark/benchmark.h>

#include "pdepot/betting.hpp"
#include "pdepot/olo.hpp"
#include "pdepot/potential.hpp"
#include "pdepot/specfun.hpp"

namespace {

void BM_Dawson(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdepot::specfun::dawson(z));
  }
}
BENCHMARK(BM_Dawson)->Arg(5)->Arg(20)->Arg(60)->Arg(150);

void BM_ErfiValue(benchmark::State& state) {
  const pdepot::Potential p = pdepot::Potential::erfi(1.0);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.value(t, std::sqrt(t)));
  }
}
BENCHMARK(BM_ErfiValue)->Arg(10)->Arg(1000);

void BM_PlayerBet(benchmark::State& state) {
  const pdepot::Potential p = pdepot::Potential::erfi(1.0);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdepot::player_bet(p, t, std::sqrt(t)));
  }
}
BENCHMARK(BM_PlayerBet)->Arg(10)->Arg(1000);

void BM_GameRounds(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) {
    pdepot::AdversaryPolicy adv = pdepot::AdversaryPolicy::rademacher(1);
    benchmark::DoNotOptimize(pdepot::play_game(
        pdepot::PlayerPolicy(pdepot::Potential::erfi(1.0)), adv, T));
  }
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(BM_GameRounds)->Arg(100)->Arg(1000);

void BM_FenchelConjugate(benchmark::State& state) {
  const pdepot::Potential p = pdepot::Potential::erfi(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdepot::fenchel_conjugate(p, 500.0, 10.0));
  }
}
BENCHMARK(BM_FenchelConjugate);

}  // namespace

BENCHMARK_MAIN();
