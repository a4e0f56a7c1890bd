#include <benchmark/benchmark.h>

#include "zsschur/coloring.hpp"
#include "zsschur/oracle.hpp"

using namespace zsschur;

namespace {

SchurParams params(int k, int r, int m, int ell, int eps, int v) {
  SchurParams p;
  p.k = k;
  p.r = r;
  p.m = m;
  p.ell = ell;
  p.eps = eps;
  p.v = v;
  p.validate();
  return p;
}

Coloring striped(int t, int m) {
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i)
    colors[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i % m);
  return make_coloring(m, std::move(colors));
}

void BM_ExistenceCheck(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Equation eq = build_equation(params(6, 3, 3, 1, 1, 0));
  const Coloring chi = striped(t, 3);
  for (auto _ : state) {
    auto witness = exists_zero_sum_solution(eq, chi, 3);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_ExistenceCheck)->Arg(8)->Arg(14)->Arg(20);

void BM_ColoringScan(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Equation eq = build_equation(params(6, 3, 3, 1, 1, 0));
  for (auto _ : state) {
    auto outcome = every_coloring_admits(eq, t, 3, 3);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_ColoringScan)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ComputeConstant(benchmark::State& state) {
  const SchurParams p = params(12, 3, 3, 1, 0, 1);
  for (auto _ : state) {
    auto result = compute_schur_number(p, default_t_max(p));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ComputeConstant)->Unit(benchmark::kMillisecond);

void BM_NaiveExistence(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Equation eq = build_equation(params(6, 3, 3, 1, 1, 0));
  const Coloring chi = striped(t, 3);
  for (auto _ : state) {
    auto witness = naive_exists(eq, chi, 3);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_NaiveExistence)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
