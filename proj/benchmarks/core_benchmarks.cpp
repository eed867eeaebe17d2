#include <benchmark/benchmark.h>

#include <bochnerlab/catalog.hpp>
#include <bochnerlab/parser.hpp>
#include <bochnerlab/recurrence.hpp>
#include <bochnerlab/symbolic.hpp>
#include <bochnerlab/verify.hpp>

using namespace bochnerlab;

namespace {

void bm_eigen_sequence_hermite(benchmark::State& state) {
  DiffOp op = family_operator(FamilySpec{"hermite", {}});
  for (auto _ : state)
    benchmark::DoNotOptimize(op.eigen_sequence(state.range(0)));
}
BENCHMARK(bm_eigen_sequence_hermite)->Arg(20)->Arg(40)->Arg(80);

void bm_eigen_sequence_type1_3(benchmark::State& state) {
  DiffOp op = family_operator(FamilySpec{
      "type1",
      {{"k", Rational(3)}, {"a1", Rational(1)}, {"a2", Rational(2)},
       {"a3", Rational(3)}}});
  for (auto _ : state)
    benchmark::DoNotOptimize(op.eigen_sequence(state.range(0)));
}
BENCHMARK(bm_eigen_sequence_type1_3)->Arg(20)->Arg(40);

void bm_recurrence_reconstruct(benchmark::State& state) {
  DiffOp op = family_operator(FamilySpec{"laguerre", {{"alpha", Rational(1)}}});
  EigenSeq seq = op.eigen_sequence(state.range(0));
  for (auto _ : state) {
    RecTable t = recurrence_table(seq);
    reconstruct_table(t);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_recurrence_reconstruct)->Arg(20)->Arg(40);

void bm_mpoly_multiply(benchmark::State& state) {
  MPoly a = parse_poly("(n^3 + 2*n*a - 5*b + 7)^4", {"n", "a", "b"});
  MPoly b = parse_poly("(a^2*b - 3*n^2 + 11)^4", {"n", "a", "b"});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_mpoly_multiply);

void bm_mpoly_gcd(benchmark::State& state) {
  MPoly g = parse_poly("n*a*b^2 - 5*a*b + 7*n - 3", {"n", "a", "b"});
  MPoly p = g * parse_poly("(n^2 + 3*a)^2", {"n", "a", "b"});
  MPoly q = g * parse_poly("(a*b - 4)^2 + n", {"n", "a", "b"});
  for (auto _ : state) benchmark::DoNotOptimize(mpoly_gcd(p, q));
}
BENCHMARK(bm_mpoly_gcd);

void bm_symbolic_cascade(benchmark::State& state) {
  SymbolicAnsatz ansatz = linear_lambda_quadratic_a3();
  for (auto _ : state)
    benchmark::DoNotOptimize(symbolic_b(ansatz, int(state.range(0))));
}
BENCHMARK(bm_symbolic_cascade)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
