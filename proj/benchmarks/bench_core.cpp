#include <benchmark/benchmark.h>

#include "lfl/hecke.hpp"
#include "lfl/langlands.hpp"
#include "lfl/residue_oracle.hpp"
#include "lfl/satake.hpp"
#include "lfl/zeta.hpp"

namespace {

using namespace lfl;

GradedRep standard_rep(const GroupData& g) {
  std::vector<long> top(g.rank(), 0);
  top[0] = 1;
  return {g, irreducible_character(Coweight(top), g)};
}

void BM_BasicFunctionGL2(benchmark::State& state) {
  const GroupData g = GroupData::gl(2);
  const LocalSetting s{g, QField(Rational(4))};
  for (auto _ : state) benchmark::DoNotOptimize(basic_function_family(standard_rep(g), state.range(0), s));
}
BENCHMARK(BM_BasicFunctionGL2)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BasicFunctionGL3(benchmark::State& state) {
  const GroupData g = GroupData::gl(3);
  const LocalSetting s{g, QField(Rational(9))};
  for (auto _ : state) benchmark::DoNotOptimize(basic_function_family(standard_rep(g), state.range(0), s));
}
BENCHMARK(BM_BasicFunctionGL3)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SphericalZetaGL3(benchmark::State& state) {
  const GroupData g = GroupData::gl(3);
  const LocalSetting s{g, QField(Rational(9))};
  const auto family = basic_function_family(standard_rep(g), 8, s);
  const SatakeParameter alpha{Scalar(2), Scalar(3), Scalar(Rational(1, 2))};
  for (auto _ : state) benchmark::DoNotOptimize(spherical_zeta(family, alpha, 8, s));
}
BENCHMARK(BM_SphericalZetaGL3)->Unit(benchmark::kMillisecond);

void BM_HeckeMultiply(benchmark::State& state) {
  const QField f{Rational(4)};
  const HeckeElement a = iwahori_basic_function_stdGL2(state.range(0), f);
  const HeckeElement b = add(hecke_basis(affine_gl2::s0()), hecke_basis(affine_gl2::omega()));
  for (auto _ : state) benchmark::DoNotOptimize(hecke_multiply(a, b, f));
}
BENCHMARK(BM_HeckeMultiply)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_IwahoriZetaPrincipal(benchmark::State& state) {
  const QField f{Rational(9)};
  const auto phi = iwahori_family(12, f, false);
  const IwahoriMatrixCoefficient c{principal_series_module({Scalar(5), Scalar(-7)}, f), {Scalar(1), Scalar(0)},
                                   {Scalar(1), Scalar(0)}};
  for (auto _ : state) benchmark::DoNotOptimize(iwahori_zeta(phi, c, 12, f));
}
BENCHMARK(BM_IwahoriZetaPrincipal)->Unit(benchmark::kMillisecond);

void BM_RecognizeRational(benchmark::State& state) {
  const QField f{Rational(4)};
  const LanglandsParameter p = make_parameter(GroupData::gl(2), {Scalar(2), Scalar(-3)}, {}, true, f);
  const LFactor lf = l_factor(p, Realization::sym_power(GroupData::gl(2), 2));
  const PowerSeries s = series_from_rational(lf.value, 16);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_rational(s, 2, 6));
}
BENCHMARK(BM_RecognizeRational)->Unit(benchmark::kMicrosecond);

void BM_OracleKCosets(benchmark::State& state) {
  const Coweight lam{state.range(0), 0};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_k_coset_count(lam, 2));
}
BENCHMARK(BM_OracleKCosets)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
