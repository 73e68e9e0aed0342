#include "relmark/lex.hpp"

#include <algorithm>
#include <unordered_set>

#include "relmark/errors.hpp"

namespace relmark {

QuotientContext::QuotientContext(MonomialIdeal base)
    : base_(std::move(base)), pommaret_(pommaret_basis(base_)), hilbert_(hilbert_data(base_)) {
  if (!is_saturated(base_)) throw PreconditionError("quotient base ideal must be saturated");
}

std::vector<Term> lex_segment(const QuotientContext& S, unsigned d, std::size_t count) {
  auto free = S.free_terms(d);
  if (count > free.size())
    throw PreconditionError("only " + std::to_string(free.size()) + " free terms in degree " + std::to_string(d));
  free.resize(count);
  return free;
}

bool is_lex_segment(const QuotientContext& S, const std::vector<Term>& terms, unsigned d) {
  std::unordered_set<Term> in;
  for (const auto& t : terms) {
    if (t.degree() != d) throw PreconditionError("lex segment test needs terms of one degree");
    if (S.is_free(t)) in.insert(t);
  }
  std::size_t seen = 0;
  for (const auto& t : S.free_terms(d)) {
    if (seen == in.size()) break;
    if (!in.contains(t)) return false;
    ++seen;
  }
  return true;
}

bool is_lex_ideal(const QuotientContext& S, const MonomialIdeal& U) {
  if (U.nvars() != S.nvars()) throw PreconditionError("ideal lives in a different ring");
  const MonomialIdeal J = U + S.base();
  if (!is_quasi_stable(J)) return false;
  const unsigned bound = std::max(regularity(J), S.regularity()) + 1;
  for (unsigned d = 0; d <= bound; ++d) {
    bool outside = false;
    for (const auto& t : S.free_terms(d)) {
      const bool in = J.contains(t);
      if (in && outside) return false;
      if (!in) outside = true;
    }
  }
  return true;
}

LexPointResult lex_point(const QuotientContext& S, const UPoly& p) {
  LexPointResult out;
  out.degree = std::max(gotzmann_number(p), S.regularity());
  const unsigned r = out.degree;
  const Rational gap = S.hilbert().polynomial(Rational(r)) - p(Rational(r));
  if (gap < 0) {
    out.reason = "p(r) exceeds the Hilbert polynomial of the quotient at r = " + std::to_string(r);
    return out;
  }
  if (gap.get_den() != 1) {
    out.reason = "non-integral value at r = " + std::to_string(r);
    return out;
  }
  const auto free = S.free_terms(r);
  const Integer need = gap.get_num();
  if (need > free.size()) {
    out.reason = "not enough free terms in degree " + std::to_string(r);
    return out;
  }
  std::vector<Term> gens(free.begin(), free.begin() + need.get_ui());
  gens.insert(gens.end(), S.base().basis().begin(), S.base().basis().end());
  const MonomialIdeal W(S.nvars(), std::move(gens));
  if (!is_quasi_stable(W)) {
    out.reason = "segment ideal is not quasi-stable";
    return out;
  }
  MonomialIdeal J = saturation(W);
  if (hilbert_polynomial(J) != p) {
    out.reason = "saturated segment ideal has Hilbert polynomial " + hilbert_polynomial(J).to_string();
    return out;
  }
  LexIdealInS lex{{}, std::move(J)};
  for (const auto& g : lex.lifted.basis())
    if (S.is_free(g)) lex.generators.push_back(g);
  out.ideal = std::move(lex);
  return out;
}

std::string to_string(MacaulayLexFamily f) {
  switch (f) {
    case MacaulayLexFamily::ClementsLindstrom: return "clements-lindstrom";
    case MacaulayLexFamily::AbedelfatahA: return "abedelfatah-a";
    case MacaulayLexFamily::AbedelfatahB: return "abedelfatah-b";
    case MacaulayLexFamily::MerminRegularSequence: return "mermin-regular-sequence";
    case MacaulayLexFamily::ExtensionOfKnown: return "extension-of-known";
    case MacaulayLexFamily::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Exp = Term::Exponent;

// Exponents are read off a ring with variables 0..top; x^inf = 0 means a
// variable (and all smaller ones) is simply absent from the generators.

std::optional<std::size_t> pure_power_var(const Term& t) {
  const auto lo = t.min_variable(), hi = t.max_variable();
  if (!lo || *lo != *hi) return std::nullopt;
  return lo;
}

/// x_top^d_top, x_{top-1}^d_{top-1}, ... with nondecreasing exponents.
bool match_clements_lindstrom(const std::vector<Term>& gens, std::size_t top) {
  // Basis is sorted descending lex, so pure powers come top variable first.
  std::size_t expect = top;
  Exp last = 1;
  for (const auto& g : gens) {
    const auto v = pure_power_var(g);
    if (!v || *v != expect) return false;
    if (g[*v] < last) return false;
    last = g[*v];
    if (expect == 0) return &g == &gens.back();
    --expect;
  }
  return true;
}

/// x_n^e_n, x_n^t x_{n-1}^e_{n-1}, ..., x_n^t x_k^e_k.
bool match_abedelfatah_a(const std::vector<Term>& gens, std::size_t top) {
  if (gens.empty()) return false;
  const auto v0 = pure_power_var(gens[0]);
  if (!v0 || *v0 != top || gens[0][top] < 2) return false;
  const Exp en = gens[0][top];
  std::optional<Exp> t;
  Exp last = en;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    if (k > top) return false;
    const Term& g = gens[k];
    const std::size_t v = top - k;
    if (g.max_variable() != top && !(g.max_variable() == v)) return false;
    if (g.min_variable() != v) return false;
    for (std::size_t j = v + 1; j < top; ++j)
      if (g[j] != 0) return false;
    if (!t) t = g[top];
    if (g[top] != *t || *t >= en) return false;
    if (g[v] < last) return false;
    last = g[v];
  }
  return true;
}

/// x_n^e_n, x_n^{e_n-1} x_{n-1}^e_{n-1}, x_n^{e_n-1} x_{n-1}^t_{n-1} x_{n-2}^e_{n-2}, ...
bool match_abedelfatah_b(const std::vector<Term>& gens, std::size_t top) {
  if (gens.empty()) return false;
  const auto v0 = pure_power_var(gens[0]);
  if (!v0 || *v0 != top || gens[0][top] < 2) return false;
  const Exp en = gens[0][top];
  std::vector<Exp> e(top + 1, 0), t(top + 1, 0);
  e[top] = en;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    if (k > top) return false;
    const Term& g = gens[k];
    const std::size_t v = top - k;
    if (g[top] != en - 1 || g.min_variable() != v) return false;
    e[v] = g[v];
    if (e[v] < e[v + 1]) return false;
    for (std::size_t j = v + 1; j < top; ++j) {
      // t_j is fixed by the first generator that passes variable j.
      if (j == v + 1) t[j] = g[j];
      else if (g[j] != t[j]) return false;
      if (t[j] >= e[j]) return false;
    }
  }
  return true;
}

/// x_n^e_n, ..., x_{r+1}^e_{r+1}, x_r^{e_r-1} x_i with i < r and e nondecreasing.
bool match_mermin(const std::vector<Term>& gens, std::size_t top) {
  if (gens.size() < 2 || gens.size() > top + 1) return false;
  const std::size_t r = top + 1 - gens.size();
  Exp last = 1;
  for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
    const auto v = pure_power_var(gens[k]);
    if (!v || *v != top - k || gens[k][*v] < last) return false;
    last = gens[k][*v];
  }
  const Term& g = gens.back();
  const auto i = g.min_variable();
  if (!i || *i >= r || g.degree() != g[r] + g[*i]) return false;
  if (g[*i] != 1) return false;
  return g[r] + 1 >= last;
}

std::optional<MacaulayLexFamily> match_families(const std::vector<Term>& gens, std::size_t top) {
  if (match_clements_lindstrom(gens, top)) return MacaulayLexFamily::ClementsLindstrom;
  if (match_abedelfatah_a(gens, top)) return MacaulayLexFamily::AbedelfatahA;
  if (match_abedelfatah_b(gens, top)) return MacaulayLexFamily::AbedelfatahB;
  if (match_mermin(gens, top)) return MacaulayLexFamily::MerminRegularSequence;
  return std::nullopt;
}

}  // namespace

MacaulayLexFamily macaulay_lex_recognizer(const MonomialIdeal& I) {
  if (I.nvars() == 0 || I.is_unit()) return MacaulayLexFamily::Unknown;
  return match_families(I.basis(), I.nvars() - 1).value_or(MacaulayLexFamily::Unknown);
}

std::size_t growth_count(const QuotientContext& S, const std::vector<Term>& W) {
  std::unordered_set<Term> grown;
  for (const auto& w : W)
    for (std::size_t i = 0; i < S.nvars(); ++i) {
      Term t = w * Term::variable(i);
      if (S.is_free(t)) grown.insert(std::move(t));
    }
  return grown.size();
}

std::vector<Term> piecewise_violations(const MonomialIdeal& I, const Term& a) {
  std::vector<Term> out;
  if (a.is_one()) return out;
  for (auto& b : terms_of_degree(I.nvars(), a.degree())) {
    if (compare(TermOrder::Lex, b, a) <= 0) break;
    if (b.min_variable() == a.min_variable() && !I.contains(b)) out.push_back(std::move(b));
  }
  return out;
}

PiecewiseLexResult is_piecewise_lexsegment(const MonomialIdeal& I) {
  PiecewiseLexResult out;
  // Basis is descending lex; the first violating a is the lex-largest one.
  for (const auto& a : I.basis()) {
    auto bad = piecewise_violations(I, a);
    if (!bad.empty()) {
      out.piecewise = false;
      out.witness = std::make_pair(a, std::move(bad.front()));
      return out;
    }
  }
  return out;
}

}  // namespace relmark
