#pragma once

#include <random>
#include <string>

#include "relmark/marked.hpp"
#include "relmark/monomial_ideal.hpp"
#include "relmark/text.hpp"

namespace testing {

inline relmark::RingContext ring(std::size_t nvars) { return relmark::RingContext::x_ring(nvars); }

inline relmark::Term T(const std::string& s, std::size_t nvars = 4) { return relmark::parse_term(s, ring(nvars)); }

inline relmark::QPoly P(const std::string& s, std::size_t nvars = 4) { return relmark::parse_polynomial(s, ring(nvars)); }

inline relmark::MonomialIdeal ideal(const std::string& s, std::size_t nvars = 4) {
  return relmark::MonomialIdeal(nvars, relmark::parse_term_list(s, ring(nvars)));
}

inline std::string show(const relmark::QPoly& p, std::size_t nvars = 4) { return relmark::format(p, ring(nvars)); }

inline std::string show(const std::vector<relmark::Term>& ts, std::size_t nvars = 4) {
  std::string out;
  for (const auto& t : ts) out += (out.empty() ? "" : ", ") + relmark::format_term(t, ring(nvars));
  return out;
}

/// Marks each polynomial of the list on its unique term in J.
inline std::vector<relmark::MarkedPolynomial<relmark::Rational>> marked(const relmark::MonomialIdeal& J,
                                                                         const std::string& list) {
  std::vector<relmark::MarkedPolynomial<relmark::Rational>> out;
  for (const auto& p : relmark::parse_polynomial_list(list, ring(J.nvars()))) out.push_back(relmark::mark_on(J, p));
  return out;
}

/// Every monomial ideal generated by up to `gens` terms of degree 1..maxdeg.
template <class F>
void for_each_small_ideal(std::size_t nvars, std::size_t gens, unsigned maxdeg, F&& fn) {
  std::vector<relmark::Term> pool;
  for (unsigned d = 1; d <= maxdeg; ++d)
    for (auto& t : relmark::terms_of_degree(nvars, d)) pool.push_back(t);
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      std::vector<relmark::Term> g;
      for (auto i : idx) g.push_back(pool[i]);
      auto mini = relmark::minimalize(g);
      if (mini.size() == g.size()) fn(relmark::MonomialIdeal(nvars, g));
    }
    if (idx.size() == gens) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace testing

#include "relmark/linalg.hpp"

namespace testing {

/// Coefficient rows of `polys` over the terms of degree s.
inline relmark::Matrix coefficient_rows(const std::vector<relmark::QPoly>& polys, std::size_t nvars, unsigned s) {
  const auto cols = relmark::terms_of_degree(nvars, s);
  relmark::Matrix m;
  for (const auto& p : polys) {
    std::vector<relmark::Rational> row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) row[c] = p.coefficient(cols[c]);
    m.push_back(std::move(row));
  }
  return m;
}

/// (F)_s + <N(J)_s> = R_s as a direct sum, by exact linear algebra on all
/// degree-s multiples of the generators.
inline bool direct_sum_in_degree(const std::vector<relmark::QPoly>& gens, const relmark::MonomialIdeal& J, unsigned s) {
  const std::size_t nvars = J.nvars();
  std::vector<relmark::QPoly> span;
  for (const auto& g : gens) {
    const unsigned d = *g.homogeneous_degree();
    if (d > s) continue;
    for (const auto& m : relmark::terms_of_degree(nvars, s - d)) span.push_back(g.mul_term(m));
  }
  const std::size_t ideal_rank = relmark::rank(coefficient_rows(span, nvars, s));
  const auto free_terms = relmark::normal_terms(J, s);
  for (const auto& t : free_terms) span.push_back(relmark::QPoly::monomial(t));
  const std::size_t total = relmark::terms_of_degree(nvars, s).size();
  return ideal_rank + free_terms.size() == total && relmark::rank(coefficient_rows(span, nvars, s)) == total;
}

/// Relative-basis check through the full marked set: H plus the common
/// Pommaret terms must be a marked basis whose ideal contains I.
inline bool relative_basis_oracle(const relmark::MonomialIdeal& I, const relmark::MonomialIdeal& J,
                                  const relmark::MarkedSet<relmark::Rational>& H) {
  using namespace relmark;
  std::vector<MarkedPolynomial<Rational>> g = H.polynomials();
  const auto PI = pommaret_basis(I);
  for (const auto& t : pommaret_basis(J).terms())
    if (PI.contains(t)) g.push_back({t, {}});
  const auto G = MarkedSet<Rational>::over(J, g);
  if (!is_marked_basis(G)) return false;
  for (const auto& b : I.basis())
    if (!reduce(G, QPoly::monomial(b)).is_zero()) return false;
  return true;
}

}  // namespace testing
