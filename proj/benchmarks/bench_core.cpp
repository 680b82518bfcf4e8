#include <benchmark/benchmark.h>

#include "confalg/catalog.hpp"
#include "confalg/classify.hpp"
#include "confalg/der.hpp"
#include "confalg/random.hpp"

namespace {

using namespace confalg;

void BM_PolyMul(benchmark::State& state) {
  Rng rng(1);
  const std::vector<Var> vs{vars::d, vars::lambda, vars::mu, Var("a"), Var("b")};
  const auto degree = static_cast<unsigned>(state.range(0));
  const MPoly p = random_nonzero_poly(rng, vs, degree, 20);
  const MPoly q = random_nonzero_poly(rng, vs, degree, 20);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul)->Arg(2)->Arg(4)->Arg(8);

void BM_Bracket(benchmark::State& state) {
  Rng rng(2);
  const AlgebraSpec alg = build_csv(MPoly(params::a), MPoly(params::b));
  const Element x = random_element(rng, alg.families, -2, 2, 3, 6);
  const Element y = random_element(rng, alg.families, -2, 2, 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(alg, x, y));
}
BENCHMARK(BM_Bracket);

void BM_CheckAllAxioms(benchmark::State& state) {
  const AlgebraSpec alg = build_csv(MPoly(params::a), MPoly(params::b));
  const bool exhaustive = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_all_axioms(alg, exhaustive).all_zero());
}
BENCHMARK(BM_CheckAllAxioms)->Arg(0)->Arg(1);

void BM_ModuleAxioms(benchmark::State& state) {
  Rng rng(3);
  const AlgebraSpec alg = build_csv(MPoly(0), MPoly(0));
  const ModuleSpec mod = build_graded_Ab(alg, BitSeq::random({-5, 5}, rng), MPoly(Var("beta")), MPoly());
  for (auto _ : state) benchmark::DoNotOptimize(check_module_axioms(alg, mod).all_zero());
}
BENCHMARK(BM_ModuleAxioms)->Unit(benchmark::kMillisecond);

void BM_DerivationSolve(benchmark::State& state) {
  const AlgebraSpec alg = build_named(state.range(0) ? "csv" : "chv", MPoly(1), MPoly(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_graded_derivations(alg, 0, 4, 2).quotient_dim);
}
BENCHMARK(BM_DerivationSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyRank1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_rank1("csv", 0, 0, 6).outcome);
}
BENCHMARK(BM_ClassifyRank1)->Unit(benchmark::kMillisecond);

void BM_ClassifyGraded(benchmark::State& state) {
  GradedBase base;
  base.alpha = Scalar(2);
  base.beta = Scalar::fraction(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_graded("csv", 0, 0, base).outcome);
}
BENCHMARK(BM_ClassifyGraded)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
