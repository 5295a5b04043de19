#include <benchmark/benchmark.h>

#include "trident/family_uv.hpp"
#include "trident/sieve.hpp"

using namespace trident;

namespace {

SieveConfig small_grid() {
  SieveConfig cfg;
  cfg.u_num_max = 3;
  cfg.u_den_max = 2;
  cfg.v_num_max = 3;
  cfg.v_den_max = 2;
  return cfg;
}

void BM_MestreNagao(benchmark::State& state) {
  CurveQ E = sieve_curve({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mestre_nagao(E, state.range(0)));
}
BENCHMARK(BM_MestreNagao)->Arg(100)->Arg(1000);

void BM_SieveSerial(benchmark::State& state) {
  SieveConfig cfg = small_grid();
  for (auto _ : state) benchmark::DoNotOptimize(sieve_grid_serial(cfg));
}
BENCHMARK(BM_SieveSerial)->Unit(benchmark::kMillisecond);

void BM_SieveParallel(benchmark::State& state) {
  SieveConfig cfg = small_grid();
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_grid(cfg));
}
BENCHMARK(BM_SieveParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CertifyTwoOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(uv_certify({2, 1}));
}
BENCHMARK(BM_CertifyTwoOne)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
