#include <benchmark/benchmark.h>

#include "tori/arith/zpoly.hpp"
#include "tori/frobenius_lift.hpp"
#include "tori/hunt.hpp"
#include "tori/newton.hpp"
#include "tori/series.hpp"
#include "tori/slopes.hpp"

using namespace tori;

namespace {

const IntegerRing ZZ;

zx::ZX Z(std::vector<long> v) {
  zx::ZX o;
  for (long a : v) o.push_back(Int(a));
  return o;
}

ZPoly2 P(std::vector<std::tuple<long, long, Int>> t) { return ZPoly2::from_terms(ZZ, t); }

void BM_LogNewtonPolygon(benchmark::State& state) {
  const RationalField QQ;
  auto l = formal_log(Series<RationalField>(QQ, {Rat(1), Rat(1)}, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon(l, Int(5)));
}
BENCHMARK(BM_LogNewtonPolygon)->Arg(126)->Arg(626);

void BM_FactorCyclotomicNorm(benchmark::State& state) {
  // t^n - (1 - t)^n has many small factors.
  const long n = state.range(0);
  auto a = upoly::pow(ZZ, Z({0, 1}), n), b = upoly::pow(ZZ, Z({1, -1}), n);
  auto f = upoly::sub(ZZ, a, b);
  for (auto _ : state) benchmark::DoNotOptimize(zx::factor(f));
}
BENCHMARK(BM_FactorCyclotomicNorm)->Arg(12)->Arg(24)->Arg(36);

void BM_VolochG(benchmark::State& state) {
  const long p = state.range(0);
  auto H = witt2_from_integer(P({{0, 2, 1}, {3, 0, -1}, {1, 0, 1}, {0, 0, -2}}), make_context(p, 2));
  for (auto _ : state) benchmark::DoNotOptimize(finiteness_verdict(H));
}
BENCHMARK(BM_VolochG)->Arg(5)->Arg(11)->Arg(23);

void BM_LogDiscSeries(benchmark::State& state) {
  auto c = make_curve(P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), 0, 3, make_context(7, 6));
  auto z0 = make_disc_point(c, Rat(1, 2), Rat(1, 2));
  auto f = RationalFunction::poly(P({{1, 0, 1}, {2, 0, -1}}));
  for (auto _ : state) benchmark::DoNotOptimize(log_f_disc_series(c, f, z0, state.range(0)));
}
BENCHMARK(BM_LogDiscSeries)->Arg(50)->Arg(100);

void BM_RelationSolve(benchmark::State& state) {
  std::vector<RationalMap> fs{make_rational_map(Z({0, 1}), Z({1})), make_rational_map(Z({1, -1}), Z({1})),
                              make_rational_map(Z({1, 1}), Z({1}))};
  for (auto _ : state) benchmark::DoNotOptimize(relation_solve(fs, state.range(0), 6));
}
BENCHMARK(BM_RelationSolve)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
