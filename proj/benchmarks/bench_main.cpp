#include <benchmark/benchmark.h>

#include "blowchern/geometry.hpp"

using namespace blowchern;

static void BM_PolyMultiply(benchmark::State& state) {
  auto t = VarTable::make({{"a", 1}, {"b", 1}, {"c", 2}, {"d", 3}});
  const unsigned k = static_cast<unsigned>(state.range(0));
  GradedPoly p = parse_poly("1 + a + 2*b - c + 1/3*d + a*b", t);
  GradedPoly q = parse_poly("1 - a + b^2 + c*a", t);
  GradedPoly pk = power(p, k), qk = power(q, k);
  for (auto _ : state) benchmark::DoNotOptimize(pk * qk);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

static void BM_SeriesInverse(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<VarTable::Entry> vars;
  for (int i = 1; i <= d; ++i) vars.push_back({"n" + std::to_string(i), i});
  auto t = VarTable::make(vars);
  GradedPoly c = GradedPoly::constant(t, 1);
  for (int i = 1; i <= d; ++i) c += GradedPoly::variable(t, "n" + std::to_string(i));
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(c, 2 * d + 2));
}
BENCHMARK(BM_SeriesInverse)->DenseRange(2, 6, 2);

static void BM_ReduceOnProjectiveBundle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto ctx = universal_context(d, 0, 2 * d + 2);
  GradedPoly p = power(ctx->ringXt->one() + ctx->zeta_class() + ctx->ringXt->var("h"), 2 * d + 2);
  for (auto _ : state) benchmark::DoNotOptimize(ctx->ringXt->reduce(p));
}
BENCHMARK(BM_ReduceOnProjectiveBundle)->DenseRange(2, 6, 2);

static void BM_VerifyDifflp(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_difflp_equals_porteous(d));
}
BENCHMARK(BM_VerifyDifflp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EulerCatalog(benchmark::State& state) {
  auto all = catalog();
  for (auto _ : state) {
    for (const auto& s : all) benchmark::DoNotOptimize(euler_identity_check(s));
  }
}
BENCHMARK(BM_EulerCatalog)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
