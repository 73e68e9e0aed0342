#include <doctest.h>

#include <random>
#include <set>

#include "relmark/scheme.hpp"
#include "support.hpp"

using namespace relmark;
using namespace testing;

namespace {

Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ParamPoly C(const std::string& s, std::size_t m) { return parse_polynomial(s, RingContext::parameters(m)); }

std::set<std::string> shown(const std::vector<ParamPoly>& gens, std::size_t m) {
  std::set<std::string> out;
  for (const auto& g : gens) out.insert(format(g, RingContext::parameters(m)));
  return out;
}

/// The generic polynomial with the opposite sign on its tail, i.e. head plus
/// the sum of c_k times the tail terms.
ParamCoeffPoly plus_form(const MarkedPolynomial<ParamPoly>& h) {
  return ParamCoeffPoly::monomial(h.head) - h.tail;
}

/// Sparse random point: each coordinate is nonzero with probability 1/4.
std::vector<Rational> sparse_point(std::size_t m, std::mt19937_64& rng) {
  std::vector<Rational> p(m);
  for (auto& v : p)
    if (rng() % 4 == 0) v = static_cast<int>(rng() % 5) - 2;
  return p;
}

struct Tally {
  std::size_t vanishing = 0, total = 0;
};

void check_relative_soundness(const MonomialIdeal& I, const MonomialIdeal& J, std::size_t samples,
                              std::mt19937_64& rng, Tally& tally) {
  const SchemeIdeal R = relative_scheme_ideal(I, J);
  const std::size_t m = R.parameters.size();
  CHECK(R.vanishes_at(std::vector<Rational>(m)));
  for (std::size_t s = 0; s < samples; ++s) {
    const auto point = sparse_point(m, rng);
    const auto H = specialize(R.generic, point);
    const bool vanish = R.vanishes_at(point);
    CHECK(vanish == is_relative_marked_basis(I, J, H));
    CHECK(vanish == relative_basis_oracle(I, J, H));
    tally.vanishing += vanish;
    ++tally.total;
  }
}

}  // namespace

TEST_CASE("parameter numbering reproduces the printed generic set") {
  const auto I = ideal("x3^2, x2^5");
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, 2);
  REQUIRE(R.parameters.size() == 20);
  CHECK(show(R.parameters.heads()) == "x3*x2, x3*x1^2");
  const auto xr = ring(4);
  const auto cr = RingContext::parameters(20);
  const auto h1 = parse_param_polynomial(
      "c1*x0^2 + c2*x0*x1 + c3*x1^2 + c4*x0*x2 + c5*x1*x2 + c6*x2^2 + c7*x0*x3 + c8*x1*x3 + x2*x3", xr, cr);
  const auto h2 = parse_param_polynomial(
      "c9*x0^3 + c10*x0^2*x1 + c11*x0*x1^2 + c12*x1^3 + c13*x0^2*x2 + c14*x0*x1*x2 + c15*x1^2*x2 + c16*x0*x2^2"
      " + c17*x1*x2^2 + c18*x2^3 + c19*x0^2*x3 + c20*x0*x1*x3 + x1^2*x3",
      xr, cr);
  const auto* g1 = R.generic.find(T("x3*x2"));
  const auto* g2 = R.generic.find(T("x3*x1^2"));
  REQUIRE(g1);
  REQUIRE(g2);
  CHECK(plus_form(*g1) == h1);
  CHECK(plus_form(*g2) == h2);
  CHECK(g1->tail.size() == 8);
  CHECK(g2->tail.size() == 12);
  CHECK(*R.parameters.index_of(T("x3*x2"), T("x1*x3")) == 7);
  // Head coefficient 1, tails of matching degree outside J.
  for (const auto& h : R.generic.polynomials())
    for (const auto& [t, c] : h.tail) {
      CHECK(t.degree() == h.head.degree());
      CHECK_FALSE(J.contains(t));
    }
}

TEST_CASE("parameter counts of both constructions") {
  const auto I = ideal("x3^2, x2^5");
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  std::vector<QPoly> Z;
  for (const auto& g : I.basis()) Z.push_back(QPoly::monomial(g));
  CHECK(full_scheme_ideal(truncation(J, 2)).parameters.size() == 50);
  CHECK(full_scheme_with_containment(J, 2, Z).parameters.size() == 50);

  for (unsigned n : {3u, 4u, 5u})
    for (unsigned p : {3u, 4u}) {
      const std::size_t nv = n + 1;
      const MonomialIdeal In(nv, {Term::variable(n, 2), Term::variable(n - 1, p)});
      const MonomialIdeal Jn(nv, {Term::variable(n), Term::variable(n - 1, p)});
      const SchemeIdeal R = relative_scheme_ideal_truncated(In, Jn, 0);
      CHECK(R.parameters.size() == n);
      std::vector<QPoly> Zn;
      for (const auto& g : In.basis()) Zn.push_back(QPoly::monomial(g));
      const SchemeIdeal full = full_scheme_with_containment(Jn, 0, Zn);
      CHECK(Integer(static_cast<unsigned long>(full.parameters.size())) == binom(n - 1 + p, p) + n - 1);
    }
}

TEST_CASE("fat point family gives the square of the maximal ideal") {
  for (unsigned n : {3u, 4u, 5u}) {
    const std::size_t nv = n + 1;
    const MonomialIdeal I(nv, {Term::variable(n, 2), Term::variable(n - 1, 3)});
    const MonomialIdeal J(nv, {Term::variable(n), Term::variable(n - 1, 3)});
    const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, 0);
    std::vector<ParamPoly> expected;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) expected.push_back(ParamPoly::monomial(Term::variable(i) * Term::variable(j)));
    CHECK(shown(R.polynomials(), n) == shown(expected, n));
    CHECK(R.generators.size() == expected.size());
    // h = x_n - c1*x0 - ... - cn*x_{n-1}
    const auto* h = R.generic.find(Term::variable(n));
    REQUIRE(h);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(h->tail.coefficient(Term::variable(k)) == ParamPoly::monomial(Term::variable(k), Rational(-1)));
    // Without truncation the outer family is the same here.
    CHECK(shown(relative_scheme_ideal(I, J).polynomials(), n) == shown(expected, n));
  }
}

TEST_CASE("degenerate inputs") {
  const auto I = ideal("x3^2, x2^3");
  const SchemeIdeal same = relative_scheme_ideal(I, I);
  CHECK(same.parameters.size() == 0);
  CHECK(same.generators.empty());

  const SchemeIdeal lin = full_scheme_ideal(ideal("x3"));
  CHECK(lin.parameters.size() == 3);
  CHECK(lin.generators.empty());

  const auto J = ideal("x3^2, x3*x2, x2^3");
  CHECK(containment_ideal(J, 2, {}).generators.empty());
  CHECK_THROWS_AS(relative_scheme_ideal(J, I), PreconditionError);
  CHECK_THROWS_AS(relative_scheme_ideal(ideal("x2^2"), ideal("x2")), NotQuasiStable);
  CHECK_THROWS_AS(relative_scheme_ideal_truncated(ideal("x3^2*x0"), ideal("x3*x0"), 1), PreconditionError);
  // rho of (x3, x2^2, x2*x1^2) is 3.
  CHECK_THROWS_AS(relative_scheme_ideal_truncated(ideal("x3^2"), ideal("x3, x2^2, x2*x1^2"), 1), PreconditionError);
  CHECK_NOTHROW(relative_scheme_ideal_truncated(ideal("x3^2"), ideal("x3, x2^2, x2*x1^2"), 2));
  CHECK_THROWS_AS(containment_ideal(ideal("x3, x2^2, x2*x1^2"), 0, {}), PreconditionError);
  CHECK_THROWS_AS(containment_ideal(J, 2, {P("x3^2 + x0")}), PreconditionError);
}

TEST_CASE("monomial containment inputs") {
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  const std::vector<QPoly> inside{P("x3^2"), P("x2^5"), P("x3*x2*x0")};
  const SchemeIdeal V = containment_ideal(J, 2, inside);
  CHECK(V.vanishes_at(std::vector<Rational>(V.parameters.size())));
  const SchemeIdeal W = containment_ideal(J, 2, {P("x1^3")});
  CHECK_FALSE(W.vanishes_at(std::vector<Rational>(W.parameters.size())));
  // x1 has degree 1 < t, so x0*x1 is reduced.
  const SchemeIdeal X = containment_ideal(J, 2, {P("x1")});
  REQUIRE(X.generators.size() == 1);
  CHECK(X.generators.front().from.x0_power == 1);
  CHECK(X.generators.front().from.x_term == T("x1*x0"));
}

TEST_CASE("worked relative family specializes to a relative marked basis") {
  const auto I = ideal("x3^2, x2^3");
  const auto J = ideal("x3^2, x3*x2, x2^3");
  const SchemeIdeal R = relative_scheme_ideal(I, J);
  REQUIRE(R.parameters.size() == 8);
  std::vector<Rational> point(8);
  point[*R.parameters.index_of(T("x3*x2"), T("x2^2"))] = 4;
  CHECK(R.vanishes_at(point));
  const auto H = specialize(R.generic, point);
  CHECK(H.polynomials().front().polynomial() == P("x3*x2 - 4*x2^2"));
  CHECK(is_relative_marked_basis(I, J, H));
}

TEST_CASE("vanishing of the relative ideal matches the relative-basis test") {
  std::mt19937_64 rng(99);
  Tally tally;
  check_relative_soundness(ideal("x3^2, x2^3"), ideal("x3^2, x3*x2, x2^3"), 50, rng, tally);
  CHECK(tally.vanishing > 0);
  CHECK(tally.vanishing < tally.total);

  // Random small pairs in three variables.
  std::vector<MonomialIdeal> qs;
  for_each_small_ideal(3, 2, 3, [&](const MonomialIdeal& M) {
    if (is_quasi_stable(M) && !M.is_unit()) qs.push_back(M);
  });
  Tally small;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < qs.size() && pairs < 40; ++a)
    for (std::size_t b = 0; b < qs.size() && pairs < 40; ++b) {
      if (a == b || !qs[b].contains(qs[a]) || (a * 7 + b) % 3 != 0) continue;
      check_relative_soundness(qs[a], qs[b], 6, rng, small);
      ++pairs;
    }
  CHECK(pairs >= 20);
  CHECK(small.vanishing > 0);
  CHECK(small.vanishing < small.total);
}

TEST_CASE("vanishing of the full scheme ideal matches the marked-basis test") {
  std::mt19937_64 rng(7);
  std::size_t vanishing = 0, total = 0;
  for (const char* gens : {"x2^2, x2*x1", "x2, x1^2", "x2^2, x2*x1, x1^3", "x2^2, x1"}) {
    const auto J = ideal(gens, 3);
    const SchemeIdeal U = full_scheme_ideal(J);
    CHECK(U.vanishes_at(std::vector<Rational>(U.parameters.size())));
    for (int s = 0; s < 25; ++s) {
      const auto point = sparse_point(U.parameters.size(), rng);
      const bool vanish = U.vanishes_at(point);
      CHECK(vanish == is_marked_basis(specialize(U.generic, point)));
      vanishing += vanish;
      ++total;
    }
  }
  CHECK(vanishing > 0);
  CHECK(vanishing < total);
}

TEST_CASE("every generator is reproduced by its own reduction") {
  const auto I = ideal("x3^2, x2^5");
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, 2);
  CHECK_FALSE(R.generators.empty());
  std::set<Provenance::Kind> kinds;
  for (const auto& g : R.generators) {
    CHECK(rerun(R, g.from) == g.polynomial);
    CHECK_FALSE(I.contains(g.from.x_term));
    kinds.insert(g.from.kind);
  }
  CHECK(kinds.count(Provenance::Kind::MultipleOfHead) == 1);
  CHECK(kinds.count(Provenance::Kind::MultipleOfCommonTerm) == 1);

  std::vector<QPoly> Z{P("x3^2"), P("x2^5")};
  const SchemeIdeal full = full_scheme_with_containment(ideal("x3^2, x3*x2, x2^3"), 1, Z);
  for (const auto& g : full.generators) CHECK(rerun(full, g.from) == g.polynomial);
}

TEST_CASE("generators are primitive and deduplicated") {
  const auto I = ideal("x3^2, x2^5");
  const auto J = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, 2);
  std::set<std::string> seen;
  for (const auto& g : R.generators) {
    CHECK(primitive_part(g.polynomial) == g.polynomial);
    CHECK(seen.insert(format(g.polynomial, R.parameters.names())).second);
  }
  CHECK(C("c1*c2 + 1/2*c3", 3) == ParamPoly::monomial(Term{1, 1}) + ParamPoly::monomial(Term{0, 0, 1}, Rational(1, 2)));
}

TEST_CASE("line-and-point family parameter count") {
  for (auto [n, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {4, 2}, {3, 3}}) {
    const std::size_t nv = n + 1;
    const Term top = Term::variable(n, k - 1);
    const MonomialIdeal I(nv, {Term::variable(n, k), top * Term::variable(n - 1)});
    const MonomialIdeal J(nv, {Term::variable(n, k), top * Term::variable(n - 1), top * Term::variable(n - 2)});
    const unsigned t = rho(J) - 1;
    const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, t);
    CHECK(Integer(static_cast<unsigned long>(R.parameters.size())) == binom(n + k, n) - 3);
    CHECK(R.parameters.heads().size() == 1);
  }
}
