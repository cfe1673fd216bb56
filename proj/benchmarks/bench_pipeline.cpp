// Microbenchmarks for the hot paths: resultants, rational factorization,
// series reduction and the full verification pipeline.

#include <benchmark/benchmark.h>

#include "gwbez/parser.hpp"
#include "gwbez/resultant.hpp"
#include "gwbez/verify.hpp"

namespace {

using gwbez::CurvePair;
using gwbez::HomogeneousPoly;
using gwbez::Rat;

CurvePair<Rat> conic_cubic() {
  return {HomogeneousPoly<Rat>(gwbez::parse_homogeneous("x1^2 + x2^2 - 2*x0^2", 2).poly),
          HomogeneousPoly<Rat>(gwbez::parse_homogeneous("x0^2*x2 - x1^3", 2).poly)};
}

void BM_ResultantConicCubic(benchmark::State& state) {
  auto pair = conic_cubic();
  auto f = dehomogenize_twisted(pair.F(), 0);
  auto g = dehomogenize_twisted(pair.G(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(gwbez::resultant_y(f, g));
}
BENCHMARK(BM_ResultantConicCubic);

void BM_FactorSextic(benchmark::State& state) {
  gwbez::UPoly<Rat> r{Rat(-2), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)};
  for (auto _ : state) benchmark::DoNotOptimize(gwbez::univariate_factor(r));
}
BENCHMARK(BM_FactorSextic);

void BM_SeriesTangentConic(benchmark::State& state) {
  auto f = gwbez::parse_affine("y - x^2").poly;
  auto g = gwbez::parse_affine("y").poly;
  for (auto _ : state) benchmark::DoNotOptimize(gwbez::series_degree(f, g));
}
BENCHMARK(BM_SeriesTangentConic);

void BM_VerifyConicCubic(benchmark::State& state) {
  auto pair = conic_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(gwbez::verify_main(pair));
}
BENCHMARK(BM_VerifyConicCubic);

}  // namespace

BENCHMARK_MAIN();
