#include <benchmark/benchmark.h>

#include "nijenhuis2d/classify.hpp"
#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/jets.hpp"
#include "nijenhuis2d/numeric.hpp"
#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/parser.hpp"

using namespace nijenhuis2d;

namespace {

const char* const kDiscs[] = {"y^2 + x^2/4", "y^2 - x^6 - x*y^4 - 2*x^3*y", "y^3 + x*y^2 + x^3", "x^2*y^3",
                              "y^4 + x*y^5"};

void BM_RationalMulAdd(benchmark::State& state) {
  Rational acc(0);
  const Rational a(355, 113), b(-22, 7);
  for (auto _ : state) {
    acc = acc * a + b;
    if (acc.denominator() > Rational(1000000)) acc = Rational(1, 3);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalMulAdd);

void BM_Parse(benchmark::State& state) {
  const std::string text = "(x + 2*y)^5 - x^2*y^3/7 + (1/2)*(y - x)^3";
  for (auto _ : state) benchmark::DoNotOptimize(parse_poly(text));
}
BENCHMARK(BM_Parse);

void BM_PolynomialPow(benchmark::State& state) {
  const auto p = parse_poly("x + 2*y - 3");
  for (auto _ : state) benchmark::DoNotOptimize(p.pow(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PolynomialPow)->Arg(4)->Arg(8)->Arg(16);

void BM_Gcd(benchmark::State& state) {
  const auto f = parse_poly("x^2 + x*y - 3*y^3 + 1");
  const auto a = parse_poly("(x - y)^3 + y") * f;
  const auto b = parse_poly("x^4 - 2*y^2 + x*y") * f;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd);

void BM_Torsion(benchmark::State& state) {
  const auto op = reconstruct_from_disc(parse_poly("y^2 + 2*x*y + x^3")).op;
  for (auto _ : state) benchmark::DoNotOptimize(torsion(op));
}
BENCHMARK(BM_Torsion);

void BM_AdmissibleCheckLocal(benchmark::State& state) {
  const auto g = parse_poly(kDiscs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(admissible_check(g, {CheckScope::Local}));
}
BENCHMARK(BM_AdmissibleCheckLocal)->DenseRange(0, 4);

void BM_MorsePathDecideOnly(benchmark::State& state) {
  const auto g = parse_poly(kDiscs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(morse_path(g, {kDefaultJetOrder, true}));
}
BENCHMARK(BM_MorsePathDecideOnly)->Arg(0)->Arg(1);

void BM_CubicPathDecideOnly(benchmark::State& state) {
  const auto g = parse_poly(kDiscs[2]);
  for (auto _ : state) benchmark::DoNotOptimize(cubic_path(g, {kDefaultJetOrder, true}));
}
BENCHMARK(BM_CubicPathDecideOnly);

void BM_Classify(benchmark::State& state) {
  const auto g = parse_poly(kDiscs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->DenseRange(0, 4);

void BM_JetReciprocal(benchmark::State& state) {
  const auto j = Jet2::from_polynomial(parse_poly("3 + x - y^2 + x*y"), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jet_reciprocal(j));
}
BENCHMARK(BM_JetReciprocal)->Arg(8)->Arg(16);

void BM_EigenField(benchmark::State& state) {
  const auto op = parse_operator({"x", "3*y^2", "y/3", "0"});
  GridSpec grid;
  grid.nx = grid.ny = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_eigenfield(op, grid));
}
BENCHMARK(BM_EigenField)->Arg(101)->Arg(201);

void BM_ExtractLevels(benchmark::State& state) {
  const auto field = eval_eigenfield(parse_operator({"x", "-2*y", "y/2", "0"}), GridSpec{});
  const auto levels = default_levels(field, 21);
  for (auto _ : state) benchmark::DoNotOptimize(extract_levels(field, levels));
}
BENCHMARK(BM_ExtractLevels);

void BM_FdResidual(benchmark::State& state) {
  const auto op = parse_operator({"x", "3*y^2", "y/3", "0"});
  GridSpec grid;
  grid.nx = grid.ny = 101;
  for (auto _ : state) benchmark::DoNotOptimize(fd_torsion_residual(op, grid, 1e-4));
}
BENCHMARK(BM_FdResidual);

void BM_Svg(benchmark::State& state) {
  const auto field = eval_eigenfield(parse_operator({"x", "-2*y", "y/2", "0"}), GridSpec{});
  const auto set = extract_levels(field, default_levels(field, 21));
  for (auto _ : state) benchmark::DoNotOptimize(to_svg(field, set));
}
BENCHMARK(BM_Svg);

}  // namespace

BENCHMARK_MAIN();
