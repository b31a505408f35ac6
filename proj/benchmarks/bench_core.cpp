#include <benchmark/benchmark.h>

#include "bspec/constructions.hpp"
#include "bspec/lemmas.hpp"
#include "bspec/random.hpp"
#include "bspec/spectra.hpp"
#include "bspec/structure.hpp"

using namespace bspec;

static void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(static_cast<unsigned>(state.range(0)));
  Rng rng = trial_rng(1, 0);
  const Fq a = random_nonzero(f, rng);
  Fq x = random_nonzero(f, rng);
  for (auto _ : state) {
    x = f.mul(x, a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(8)->Arg(16);

static void BM_CharPolyHessenberg(benchmark::State& state) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(2, 0);
  const Matrix m = random_matrix(f, state.range(0), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_hessenberg(m));
}
BENCHMARK(BM_CharPolyHessenberg)->DenseRange(3, 7, 2);

static void BM_CharPolyBerkowitz(benchmark::State& state) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(2, 0);
  const Matrix m = random_matrix(f, state.range(0), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_berkowitz(m));
}
BENCHMARK(BM_CharPolyBerkowitz)->DenseRange(3, 7, 2);

static void BM_ClosureRootCount(benchmark::State& state) {
  const Field f = Field::make(2);
  Rng rng = trial_rng(3, 0);
  const Poly p = char_poly(random_matrix(f, state.range(0), state.range(0), rng));
  for (auto _ : state) benchmark::DoNotOptimize(count_roots_in_closure(p));
}
BENCHMARK(BM_ClosureRootCount)->Arg(4)->Arg(6);

static void BM_CheckSpaceSl2JoinNt2(benchmark::State& state) {
  const Field f = Field::make(2);
  const MatSubspace s = joint(sl(f, 2), nt(f, 2));
  const SpecPredicate pred = SpecPredicate::parse("1bar*-spec");
  for (auto _ : state) benchmark::DoNotOptimize(check_space(s, pred));
  state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_CheckSpaceSl2JoinNt2)->Unit(benchmark::kMillisecond);

static void BM_DetectHurdle(benchmark::State& state) {
  const Field f = Field::make(2);
  const MatSubspace s = hurdle_template(f, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_hurdle(s));
}
BENCHMARK(BM_DetectHurdle)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_AdaptedScan(benchmark::State& state) {
  const Field f = Field::make(2);
  const MatSubspace s = joint(sl(f, 2), nt(f, state.range(0) - 2));
  for (auto _ : state) benchmark::DoNotOptimize(adapted_scan(s));
}
BENCHMARK(BM_AdaptedScan)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ChoiceSolveAffine(benchmark::State& state) {
  const Field f = Field::make(2);
  const Matrix m = companion(Poly::from_codes(f, {1, 2, 3, 1, 1}));
  const Poly target = Poly::from_codes(f, {3, 0, 2, 1, 1});
  const ChoiceSolver solver(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(target));
}
BENCHMARK(BM_ChoiceSolveAffine);

static void BM_Harness(benchmark::State& state) {
  HarnessOptions o;
  o.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(run_harness("splitting", o));
}
BENCHMARK(BM_Harness)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
