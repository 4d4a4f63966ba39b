#include <benchmark/benchmark.h>

#include "gcluster/fixtures.hpp"

using namespace gcluster;

namespace {

VarTablePtr table() {
  static auto t = make_var_table({"a", "b", "c", "d", "e"});
  return t;
}

Poly dense(int n) {
  std::string s = "(a + 2*b - c + 3*d*e + 1)^" + std::to_string(n);
  return parse_poly(s, table());
}

void BM_PolyMultiply(benchmark::State& st) {
  Poly p = dense(static_cast<int>(st.range(0))), q = dense(static_cast<int>(st.range(0)) - 1);
  for (auto _ : st) benchmark::DoNotOptimize(p * q);
  st.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_PolyMultiply)->Arg(3)->Arg(5)->Arg(7);

void BM_PolyExactDivide(benchmark::State& st) {
  Poly q = dense(static_cast<int>(st.range(0))), c = parse_poly("a*b - c^2 + d - 5*e + 7", table());
  Poly p = q * c;
  for (auto _ : st) benchmark::DoNotOptimize(try_div_exact(p, c));
}
BENCHMARK(BM_PolyExactDivide)->Arg(3)->Arg(5)->Arg(7);

void BM_Gc3MutatePullback(benchmark::State& st) {
  auto ps = fixture("gc3").pullback();
  for (auto _ : st) {
    auto cur = ps;
    for (int m : {1, 0, 3, 1}) cur = mutate_pullback(cur, m);
    benchmark::DoNotOptimize(cur);
  }
}
BENCHMARK(BM_Gc3MutatePullback)->Unit(benchmark::kMillisecond);

void BM_IndependenceGl3(benchmark::State& st) {
  auto ps = fixture("gl3_lift").pullback();
  for (auto _ : st) benchmark::DoNotOptimize(independence_for_pullback(ps, 0));
}
BENCHMARK(BM_IndependenceGl3)->Unit(benchmark::kMillisecond);

void BM_HullSupport(benchmark::State& st) {
  std::vector<Rational> chi;
  for (int r = 0; r <= st.range(0); ++r) chi.emplace_back(r == 0 || r == st.range(0) ? 0 : (r * 7919) % 31, 3);
  auto p = make_profile(chi);
  for (auto _ : st) benchmark::DoNotOptimize(support_arrows(p, Rational(-1, 3)));
}
BENCHMARK(BM_HullSupport)->Arg(6)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
