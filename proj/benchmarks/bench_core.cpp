#include <benchmark/benchmark.h>

#include "sl2fd/sl2fd.hpp"

using namespace sl2fd;

namespace {

SolvableParams sample_params() {
  return {Rational(3, 2), Rational(-1, 3), Rational(2), Rational(5, 7), Rational(1), Rational(1, 2)};
}

void BM_ShiftCompose(benchmark::State& state) {
  ShiftOp a = explicit_three_point(sample_params());
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, a));
}
BENCHMARK(BM_ShiftCompose);

void BM_VerifyRelations(benchmark::State& state) {
  const int dmax = static_cast<int>(state.range(0));
  auto rep = HeisenbergRep::difference(Rational(-2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(3, rep, dmax));
}
BENCHMARK(BM_VerifyRelations)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_MatrixInBasis(benchmark::State& state) {
  auto p = sample_params();
  auto rep = HeisenbergRep::difference(p.delta);
  Operator op = build_operator(p, rep);
  const int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_in_basis(op, rep.natural_basis(), dmax));
}
BENCHMARK(BM_MatrixInBasis)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State& state) {
  QesParams qp{1, Rational(1, 2), -1, 2, Rational(1, 3), 0, 1, static_cast<int>(state.range(0))};
  MatrixQ block = invariant_block(qp, HeisenbergRep::difference(qp.delta));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(block));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(16);

void BM_Eigenpolys(benchmark::State& state) {
  auto p = sample_params();
  auto rep = HeisenbergRep::difference(p.delta);
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenpolys(p, rep, kmax));
}
BENCHMARK(BM_Eigenpolys)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
