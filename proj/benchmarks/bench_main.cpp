#include <benchmark/benchmark.h>

#include "pforge/dcl.hpp"
#include "pforge/klocal.hpp"
#include "pforge/oracle.hpp"
#include "pforge/tile.hpp"
#include "pforge/wishart.hpp"
#include "pforge/xorsat.hpp"

using namespace pforge;

static void BM_OracleTile2D(benchmark::State& state) {
  RngStream rng(1);
  TileParams tp;
  tp.L = 4;
  tp.p = {0.25, 0.25, 0.25};
  const auto inst = generate_tile_instance(tp, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ground(inst.polynomial, 1));
}
BENCHMARK(BM_OracleTile2D);

static void BM_OracleWishart(benchmark::State& state) {
  RngStream rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = generate_wishart_instance({n, 0.5, false, true}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ground(inst.polynomial, 1));
}
BENCHMARK(BM_OracleWishart)->Arg(12)->Arg(16)->Arg(20);

static void BM_Tile3D(benchmark::State& state) {
  RngStream rng(3);
  TileParams tp;
  tp.dimension = 3;
  tp.L = static_cast<std::size_t>(state.range(0));
  tp.pf = {0.3, 0.3};
  tp.gauge_transform = true;
  for (auto _ : state) benchmark::DoNotOptimize(generate_tile_instance(tp, rng));
}
BENCHMARK(BM_Tile3D)->Arg(8)->Arg(16);

static void BM_WishartDiscrete(benchmark::State& state) {
  RngStream rng(4);
  const WishartParams wp{static_cast<std::size_t>(state.range(0)), 0.5, true, true};
  for (auto _ : state) benchmark::DoNotOptimize(generate_wishart_instance(wp, rng));
}
BENCHMARK(BM_WishartDiscrete)->Arg(64)->Arg(256);

static void BM_Dcl(benchmark::State& state) {
  RngStream rng(5);
  const DclParams p{16, 16, 0.3, 3, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(generate_dcl_instance(p, rng));
}
BENCHMARK(BM_Dcl);

static void BM_Xorsat(benchmark::State& state) {
  RngStream rng(6);
  const XorsatParams p{3, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(generate_xorsat_instance(p, rng));
}
BENCHMARK(BM_Xorsat)->Arg(64)->Arg(1024);

static void BM_KLocalProduct(benchmark::State& state) {
  RngStream rng(7);
  const KLocalPlan plan{4, {WishartParams{32, 0.5, false, false}, WishartParams{32, 0.5, false, false}}};
  for (auto _ : state) benchmark::DoNotOptimize(generate_klocal_instance(plan, rng));
}
BENCHMARK(BM_KLocalProduct);
BENCHMARK_MAIN();
