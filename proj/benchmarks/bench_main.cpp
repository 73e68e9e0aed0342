#include <benchmark/benchmark.h>

#include "relmark/groebner.hpp"
#include "relmark/hilbert.hpp"
#include "relmark/lex.hpp"
#include "relmark/scheme.hpp"
#include "relmark/text.hpp"

using namespace relmark;

namespace {

MonomialIdeal ideal(const char* text, std::size_t nvars = 4) {
  return MonomialIdeal(nvars, parse_term_list(text, RingContext::x_ring(nvars)));
}

void BM_Pommaret(benchmark::State& state) {
  // (x_n^e, x_{n-1}^e, ..., x_1^e) in n+1 variables.
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Term> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(Term::variable(i, 3));
  const MonomialIdeal I(n + 1, gens);
  for (auto _ : state) benchmark::DoNotOptimize(pommaret_basis(I));
}
BENCHMARK(BM_Pommaret)->DenseRange(2, 5);

void BM_RelativeScheme(benchmark::State& state) {
  const auto I = ideal("x3^2, x2^5");
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  for (auto _ : state) benchmark::DoNotOptimize(relative_scheme_ideal_truncated(I, J, 2));
}
BENCHMARK(BM_RelativeScheme)->Unit(benchmark::kMillisecond);

void BM_SchemeGroebner(benchmark::State& state) {
  const auto R = relative_scheme_ideal_truncated(ideal("x3^2, x2^5"), ideal("x3^2, x3*x2, x3*x1^2, x2^5"), 2);
  const auto gens = R.polynomials();
  const auto order = state.range(0) ? TermOrder::Lex : TermOrder::DegRevLex;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, R.parameters.size(), order));
}
BENCHMARK(BM_SchemeGroebner)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FullScheme(benchmark::State& state) {
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  const std::vector<QPoly> Z{QPoly::monomial(Term::variable(3, 2)), QPoly::monomial(Term::variable(2, 5))};
  for (auto _ : state) benchmark::DoNotOptimize(full_scheme_with_containment(J, 2, Z));
}
BENCHMARK(BM_FullScheme)->Unit(benchmark::kMillisecond);

void BM_LexPoint(benchmark::State& state) {
  const QuotientContext S(ideal("x3^2, x2^5"));
  const UPoly p = UPoly::parse("5*z - 3");
  for (auto _ : state) benchmark::DoNotOptimize(lex_point(S, p));
}
BENCHMARK(BM_LexPoint);

}  // namespace

BENCHMARK_MAIN();
