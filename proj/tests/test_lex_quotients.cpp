#include <doctest.h>

#include <algorithm>

#include "relmark/errors.hpp"
#include "relmark/hilbert.hpp"
#include "relmark/lex.hpp"
#include "support.hpp"

using namespace relmark;
using namespace testing;

namespace {

/// Free terms of degree d, descending lex, by brute force over all terms.
std::vector<Term> free_by_enumeration(const MonomialIdeal& I, unsigned d) {
  std::vector<Term> out;
  for (auto& t : terms_of_degree(I.nvars(), d))
    if (!I.contains(t)) out.push_back(t);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return compare(TermOrder::Lex, a, b) > 0; });
  return out;
}

/// The free terms of `set` (degree d) are exactly the first ones of degree d.
bool prefix_oracle(const MonomialIdeal& base, const std::vector<Term>& set, unsigned d) {
  const auto all = free_by_enumeration(base, d);
  std::size_t k = 0;
  for (const auto& t : all) k += std::count(set.begin(), set.end(), t) > 0;
  for (std::size_t i = 0; i < k; ++i)
    if (std::find(set.begin(), set.end(), all[i]) == set.end()) return false;
  return true;
}

template <class F>
void for_each_base(std::size_t nvars, std::size_t gens, unsigned maxdeg, F&& fn) {
  fn(MonomialIdeal(nvars));
  for_each_small_ideal(nvars, gens, maxdeg, [&](const MonomialIdeal& I) {
    if (is_saturated(I) && is_quasi_stable(I)) fn(I);
  });
}

std::vector<Term> grow(const MonomialIdeal& base, const std::vector<Term>& W) {
  std::vector<Term> out;
  for (const auto& w : W)
    for (std::size_t i = 0; i < base.nvars(); ++i) {
      const Term t = w * Term::variable(i);
      if (!base.contains(t) && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
  return out;
}

}  // namespace

TEST_CASE("quotient context preconditions") {
  CHECK_THROWS_AS(QuotientContext(ideal("x3^2, x3*x0")), PreconditionError);
  CHECK_THROWS_AS(QuotientContext(ideal("x2^2")), NotQuasiStable);
  const QuotientContext S(ideal("x3^2, x2^5"));
  CHECK(S.regularity() == 6);
  CHECK(S.free_terms(2) == free_by_enumeration(S.base(), 2));
}

TEST_CASE("lex segments") {
  const QuotientContext S(ideal("x3^2, x3*x2*x1^2, x3*x2^7"));
  CHECK(lex_segment(S, 4, 1) == std::vector<Term>{T("x3*x2^3")});
  CHECK(lex_segment(S, 4, 0).empty());
  const QuotientContext C(ideal("x3^2, x2^5"));
  CHECK(lex_segment(C, 2, 2) == std::vector<Term>{T("x3*x2"), T("x3*x1")});
  const auto deg2 = free_by_enumeration(C.base(), 2);
  CHECK(lex_segment(C, 2, 2) == std::vector<Term>(deg2.begin(), deg2.begin() + 2));
  CHECK_THROWS_AS(lex_segment(C, 1, 5), PreconditionError);
  CHECK(lex_segment(C, 1, 3).size() == 3);
  CHECK(is_lex_segment(C, {T("x3*x2"), T("x3^2")}, 2));
  CHECK_FALSE(is_lex_segment(C, {T("x3*x1")}, 2));
}

TEST_CASE("lex ideals in a quotient and in the polynomial ring") {
  const QuotientContext S(ideal("x3^2, x2^5"));
  const auto U = ideal("x3^2, x3*x2, x3*x1^2, x2^5");
  CHECK(is_lex_ideal(S, U));
  CHECK_FALSE(is_lex_ideal(QuotientContext(MonomialIdeal(4)), U));
  for (const char* base : {"x3^2, x2^5", "x3^2", "x3, x2^2"})
    CHECK(is_lex_ideal(QuotientContext(ideal(base)), ideal("x3")));
  CHECK_FALSE(is_lex_ideal(S, ideal("x2")));
  CHECK(is_lex_ideal(S, MonomialIdeal(4)));
}

TEST_CASE("growth of a segment against another set") {
  const QuotientContext S(ideal("x3^2, x3*x2*x1^2, x3*x2^7"));
  CHECK(growth_count(S, {T("x3*x1^3")}) == 2);
  CHECK(growth_count(S, {T("x3*x2^3")}) == 3);
  CHECK(growth_count(S, {}) == 0);
  CHECK(growth_count(S, lex_segment(S, 4, 1)) == grow(S.base(), lex_segment(S, 4, 1)).size());
}

TEST_CASE("family recognizer") {
  using F = MacaulayLexFamily;
  CHECK(macaulay_lex_recognizer(ideal("x3^2, x2^5")) == F::ClementsLindstrom);
  CHECK(macaulay_lex_recognizer(ideal("x3, x2^2, x1^2, x0^3")) == F::ClementsLindstrom);
  CHECK(macaulay_lex_recognizer(MonomialIdeal(4)) == F::ClementsLindstrom);
  CHECK(macaulay_lex_recognizer(ideal("x3^2, x3*x2^7, x3*x2*x1^7, x3*x2*x1^2*x0^7")) == F::AbedelfatahB);
  CHECK(macaulay_lex_recognizer(ideal("x3^2, x3*x2^3, x3*x2*x1^3, x3*x2*x1^2*x0^3")) == F::AbedelfatahB);
  // Same ideal with an extra smallest variable w.
  CHECK(macaulay_lex_recognizer(ideal("x4^2, x4*x3^3, x4*x3*x2^3, x4*x3*x2^2*x1^3", 5)) == F::AbedelfatahB);
  CHECK(macaulay_lex_recognizer(ideal("x3^3, x3*x2^3, x3*x1^4")) == F::AbedelfatahA);
  CHECK(macaulay_lex_recognizer(ideal("x3^3, x3^2*x2^4, x3^2*x2^2*x1^5")) == F::AbedelfatahB);
  CHECK(macaulay_lex_recognizer(ideal("x3^2, x2^3*x0")) == F::MerminRegularSequence);
  CHECK(macaulay_lex_recognizer(ideal("x1*x0", 2)) == F::Unknown);
  CHECK(macaulay_lex_recognizer(ideal("x3^3, x2*x1")) == F::Unknown);
  CHECK(macaulay_lex_recognizer(ideal("x3^2, x2")) == F::Unknown);
  CHECK(macaulay_lex_recognizer(ideal("x2^2")) == F::Unknown);
  CHECK(macaulay_lex_recognizer(MonomialIdeal::unit(4)) == F::Unknown);
  // Exponents must not decrease.
  CHECK(macaulay_lex_recognizer(ideal("x3^3, x3^2*x2^2, x3^2*x2*x1")) == F::Unknown);
  // Recognized ideals of the implemented families that are quasi-stable stay so.
  for_each_small_ideal(3, 3, 3, [&](const MonomialIdeal& I) {
    const auto f = macaulay_lex_recognizer(I);
    if (f == F::ClementsLindstrom || f == F::AbedelfatahA || f == F::AbedelfatahB) CHECK(is_quasi_stable(I));
    if (f == F::MerminRegularSequence) CHECK_FALSE(is_quasi_stable(I));
  });
}

TEST_CASE("piecewise lexsegment test") {
  // Ring K[w, x0..x3]: index 0 is w.
  const auto I = ideal("x4^2, x4*x3^3, x4*x3*x2^3, x4*x3*x2^2*x1^3", 5);
  CHECK(regularity(I) == 8);
  const auto I8 = truncation(I, 8);
  const auto r = is_piecewise_lexsegment(I8);
  CHECK_FALSE(r.piecewise);
  REQUIRE(r.witness);
  const auto& [a, b] = *r.witness;
  CHECK(a.degree() == b.degree());
  CHECK(compare(TermOrder::Lex, b, a) > 0);
  CHECK(a.min_variable() == b.min_variable());
  CHECK_FALSE(I8.contains(b));
  const Term a8 = T("x4*x3*x2^2*x1^4", 5);
  CHECK(std::find(I8.basis().begin(), I8.basis().end(), a8) != I8.basis().end());
  CHECK(piecewise_violations(I8, a8) == std::vector<Term>{T("x4*x3^2*x2*x1^4", 5), T("x4*x3^2*x1^5", 5)});
  CHECK(is_piecewise_lexsegment(ideal("x3^2")).piecewise);
  CHECK(is_piecewise_lexsegment(ideal("x3^2, x3*x2, x3*x1^2, x3*x1*x0, x2^3")).piecewise);
}

TEST_CASE("lex points") {
  SUBCASE("fat point family") {
    for (std::size_t n : {3u, 4u})
      for (unsigned p : {2u, 3u, 4u}) {
        const std::size_t nv = n + 1;
        const MonomialIdeal base(nv, {Term::variable(n, 2), Term::variable(n - 1, p)});
        const MonomialIdeal target(nv, {Term::variable(n), Term::variable(n - 1, p)});
        const QuotientContext S(base);
        const auto r = lex_point(S, hilbert_polynomial(target));
        REQUIRE(r.ideal);
        CHECK(r.ideal->lifted == target);
        CHECK(r.ideal->generators == std::vector<Term>{Term::variable(n)});
      }
  }
  SUBCASE("whole quotient") {
    const QuotientContext S(ideal("x3^2, x2^5"));
    const auto r = lex_point(S, S.hilbert().polynomial);
    REQUIRE(r.ideal);
    CHECK(r.ideal->generators.empty());
    CHECK(r.ideal->lifted == S.base());
  }
  SUBCASE("curve in a quotient") {
    const QuotientContext S(ideal("x3^2, x2^5"));
    const auto r = lex_point(S, UPoly::parse("5*z - 3"));
    REQUIRE(r.ideal);
    CHECK(r.degree == 7);
    CHECK(r.ideal->lifted == ideal("x3^2, x3*x2, x3*x1^2, x2^5"));
    CHECK(r.ideal->generators == std::vector<Term>{T("x3*x2"), T("x3*x1^2")});
    CHECK(hilbert_polynomial(r.ideal->lifted) == UPoly::parse("5*z - 3"));
  }
  SUBCASE("lex points of the smooth and singular families") {
    for (std::size_t n : {3u, 4u})
      for (unsigned k : {2u, 3u}) {
        const std::size_t nv = n + 1;
        const auto xm = Term::variable(n - 1), xl = Term::variable(n - 2);
        const MonomialIdeal base(nv, {Term::variable(n, k), Term::variable(n, k - 1) * xm});
        const MonomialIdeal target(nv, {Term::variable(n, k), Term::variable(n, k - 1) * xm, Term::variable(n, k - 1) * xl});
        const auto r = lex_point(QuotientContext(base), hilbert_polynomial(target));
        REQUIRE(r.ideal);
        CHECK(r.ideal->lifted == target);
        CHECK(is_lex_ideal(QuotientContext(MonomialIdeal(nv)), target));
      }
    for (std::size_t n : {3u, 4u}) {
      const std::size_t nv = n + 1;
      const auto xn = Term::variable(n), xm = Term::variable(n - 1), xl = Term::variable(n - 2);
      const MonomialIdeal base(nv, {xn * xn, xn * xm, xm * xm});
      const MonomialIdeal target(nv, {xn * xn, xn * xm, xn * xl, xm * xm});
      const auto r = lex_point(QuotientContext(base), hilbert_polynomial(target));
      REQUIRE(r.ideal);
      CHECK(r.ideal->lifted == target);
      CHECK_FALSE(is_lex_ideal(QuotientContext(MonomialIdeal(nv)), target));
    }
    const auto r = lex_point(QuotientContext(ideal("x3^3, x3^2*x2")), hilbert_polynomial(ideal("x3^2, x3*x2, x3*x1")));
    REQUIRE(r.ideal);
    CHECK(r.ideal->lifted == ideal("x3^2, x3*x2, x3*x1"));
  }
  SUBCASE("empty answers") {
    const QuotientContext S(ideal("x3^2"));
    const auto r = lex_point(S, UPoly::binomial(3, 3));
    CHECK_FALSE(r.ideal);
    CHECK_FALSE(r.reason.empty());
  }
}

TEST_CASE("lex point is idempotent and has the smallest Hilbert function") {
  struct Case {
    const char* base;
    const char* hp;
  };
  for (const auto& c : {Case{"x3^2, x2^5", "5*z - 3"}, Case{"x3^2, x2^5", "5*z + 1"}, Case{"x3^2, x2^3", "2*z + 1"},
                        Case{"x3^2", "2*z + 2"}, Case{"x3^3, x3^2*x2", "z + 1"}, Case{"x3^2, x3*x2", "3"}}) {
    CAPTURE(c.base);
    CAPTURE(c.hp);
    const QuotientContext S(ideal(c.base));
    const UPoly p = UPoly::parse(c.hp);
    const auto r = lex_point(S, p);
    REQUIRE(r.ideal);
    CHECK(is_lex_ideal(S, r.ideal->lifted));
    const auto again = lex_point(S, hilbert_polynomial(r.ideal->lifted));
    REQUIRE(again.ideal);
    CHECK(again.ideal->lifted == r.ideal->lifted);
    // Every saturated monomial point over the base with the same Hilbert
    // polynomial, from up to three extra generators of degree <= 3.
    const auto lex_hf = hilbert_data(r.ideal->lifted);
    const auto free = [&] {
      std::vector<Term> out;
      for (unsigned d = 1; d <= 3; ++d)
        for (const auto& t : free_by_enumeration(S.base(), d))
          if (!t.min_variable() || *t.min_variable() > 0) out.push_back(t);
      return out;
    }();
    std::size_t competitors = 0;
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (!idx.empty()) {
        std::vector<Term> g = S.base().basis();
        for (auto i : idx) g.push_back(free[i]);
        const MonomialIdeal J(S.nvars(), g);
        if (hilbert_polynomial(J) == p) {
          ++competitors;
          const auto hf = hilbert_data(J);
          for (unsigned d = 0; d <= 10; ++d) CHECK(lex_hf.function(d) <= hf.function(d));
        }
      }
      if (idx.size() == 3) return;
      for (std::size_t i = start; i < free.size(); ++i) {
        idx.push_back(i);
        self(self, i + 1);
        idx.pop_back();
      }
    };
    rec(rec, 0);
    CHECK(competitors > 0);
  }
}

TEST_CASE("segments grow into segments, and their ideals are quasi-stable lex ideals") {
  std::size_t bases = 0, segments = 0;
  for (std::size_t nv : {3u, 4u})
    for_each_base(nv, 3, 2, [&](const MonomialIdeal& base) {
      ++bases;
      const QuotientContext S(base);
      for (unsigned d = 1; d + 1 <= 6; ++d) {
        const auto all = free_by_enumeration(base, d);
        for (std::size_t count = 0; count <= all.size(); ++count) {
          ++segments;
          const std::vector<Term> W(all.begin(), all.begin() + count);
          CHECK(W == lex_segment(S, d, count));
          CHECK(prefix_oracle(base, grow(base, W), d + 1));
          std::vector<Term> gens = W;
          gens.insert(gens.end(), base.basis().begin(), base.basis().end());
          const MonomialIdeal U(nv, gens);
          CHECK(is_quasi_stable(U));
          CHECK(is_lex_ideal(S, U));
          const auto sat = saturation(U);
          CHECK(is_lex_ideal(S, sat));
        }
      }
    });
  CHECK(bases > 20);
  CHECK(segments > 1000);
}
