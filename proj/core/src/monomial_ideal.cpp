#include "relmark/monomial_ideal.hpp"

#include <algorithm>

#include "relmark/errors.hpp"

namespace relmark {

namespace {

void sort_lex_desc(std::vector<Term>& v) { std::sort(v.begin(), v.end(), TermGreater{TermOrder::Lex}); }

void check_ring(std::size_t nvars, const Term& t) {
  if (t.span() > nvars)
    throw PreconditionError("term uses a variable outside the ring of " + std::to_string(nvars) + " variables");
}

bool divisible_by_any(const std::vector<Term>& gens, const Term& t) {
  return std::any_of(gens.begin(), gens.end(), [&](const Term& g) { return g.divides(t); });
}

}  // namespace

std::vector<Term> minimalize(std::vector<Term> gens) {
  // Ascending degree first: a divisor never comes after its multiple.
  std::sort(gens.begin(), gens.end(), TermGreater{TermOrder::DegRevLex});
  std::reverse(gens.begin(), gens.end());
  std::vector<Term> out;
  for (auto& g : gens)
    if (!divisible_by_any(out, g)) out.push_back(std::move(g));
  sort_lex_desc(out);
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw PreconditionError("a ring needs at least one variable");
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Term> gens) : MonomialIdeal(nvars) {
  for (const auto& g : gens) check_ring(nvars, g);
  basis_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) { return MonomialIdeal(nvars, {Term{}}); }

unsigned MonomialIdeal::max_generator_degree() const {
  unsigned d = 0;
  for (const auto& g : basis_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Term& t) const { return divisible_by_any(basis_, t); }

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Term& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Term> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return MonomialIdeal(std::max(nvars_, other.nvars_), std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Term& m) const {
  std::vector<Term> gens;
  gens.reserve(basis_.size());
  for (const auto& g : basis_) gens.push_back(g / g.gcd(m));
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw PreconditionError("extension to a smaller ring");
  return MonomialIdeal(nvars, basis_);
}

bool is_quasi_stable(const MonomialIdeal& ideal) {
  const auto& gens = ideal.basis();
  std::vector<Term::Exponent> top(ideal.nvars(), 0);
  for (const auto& g : gens)
    for (std::size_t j = 0; j < ideal.nvars(); ++j) top[j] = std::max(top[j], g[j]);

  for (const auto& g : gens) {
    const auto i = g.min_variable();
    if (!i) continue;  // unit ideal
    const Term base = g.without(*i);
    for (std::size_t j = *i + 1; j < ideal.nvars(); ++j) {
      // x_j^s * base lies in the ideal for some s iff it does for s = top[j].
      if (!ideal.contains(base * Term::variable(j, top[j]))) return false;
    }
  }
  return true;
}

PommaretBasis::PommaretBasis(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  sort_lex_desc(terms_);
}

unsigned PommaretBasis::regularity() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

bool PommaretBasis::contains(const Term& t) const { return std::find(terms_.begin(), terms_.end(), t) != terms_.end(); }

PommaretBasis pommaret_basis(const MonomialIdeal& ideal, std::optional<unsigned> degree_cap) {
  if (!is_quasi_stable(ideal)) throw NotQuasiStable("the ideal is not quasi-stable");
  const std::size_t nvars = ideal.nvars();
  const unsigned cap = degree_cap.value_or(2 * std::max(1u, ideal.max_generator_degree()) * static_cast<unsigned>(nvars));
  if (cap < ideal.max_generator_degree()) throw PreconditionError("degree cap below the generator degrees");

  std::vector<Term> P = ideal.basis();
  if (ideal.is_unit()) return PommaretBasis(nvars, P);

  for (std::size_t idx = 0; idx < P.size(); ++idx) {
    const Term p = P[idx];
    for (std::size_t j = *p.min_variable() + 1; j < nvars; ++j) {
      Term t = p * Term::variable(j);
      const bool covered = std::any_of(P.begin(), P.end(), [&](const Term& q) { return in_pommaret_cone(q, t); });
      if (covered) continue;
      if (t.degree() > cap) throw Error("Pommaret completion exceeded its degree cap");
      P.push_back(std::move(t));
    }
  }

  // Keep exactly the terms u with u / min(u) outside the ideal.
  std::vector<Term> out;
  for (auto& u : P)
    if (!ideal.contains(u / Term::variable(*u.min_variable()))) out.push_back(std::move(u));
  return PommaretBasis(nvars, std::move(out));
}

std::optional<Term> pommaret_divisor(const PommaretBasis& basis, const Term& t) {
  for (const auto& q : basis.terms())
    if (in_pommaret_cone(q, t)) return q;
  return std::nullopt;
}

MonomialIdeal saturation(const MonomialIdeal& ideal) {
  if (!is_quasi_stable(ideal)) throw NotQuasiStable("saturation needs a quasi-stable ideal");
  std::vector<Term> gens;
  for (const auto& g : ideal.basis()) gens.push_back(g.without(0));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

bool is_saturated(const MonomialIdeal& ideal) {
  return std::none_of(ideal.basis().begin(), ideal.basis().end(), [](const Term& g) { return g[0] > 0; });
}

MonomialIdeal truncation(const MonomialIdeal& ideal, unsigned t) {
  std::vector<Term> gens;
  for (const auto& g : ideal.basis()) {
    if (g.degree() >= t) {
      gens.push_back(g);
      continue;
    }
    for (const auto& m : terms_of_degree(ideal.nvars(), t - g.degree())) gens.push_back(g * m);
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

unsigned regularity(const MonomialIdeal& ideal) { return pommaret_basis(ideal).regularity(); }

unsigned rho(const PommaretBasis& basis) {
  unsigned r = 0;
  for (const auto& t : basis.terms())
    if (t[1] > 0) r = std::max(r, t.degree());
  return r == 0 ? 1 : r;
}

unsigned rho(const MonomialIdeal& ideal) { return rho(pommaret_basis(ideal)); }

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    if (!is_quasi_stable(ideal)) throw NotQuasiStable("the ideal is not quasi-stable");
    return true;
  }
  const PommaretBasis P = pommaret_basis(ideal);
  std::size_t m = ideal.nvars();
  for (const auto& t : P.terms()) m = std::min(m, *t.min_variable());
  return std::any_of(ideal.basis().begin(), ideal.basis().end(),
                     [&](const Term& g) { return g.span() == m + 1 && g.degree() == g[m]; });
}

FreeModuleDecomposition free_module_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("the quotient by the unit ideal is zero");
  if (!is_cohen_macaulay(ideal)) throw PreconditionError("the quotient is not Cohen-Macaulay");
  FreeModuleDecomposition out;
  std::size_t low = ideal.nvars();  // k+1
  for (const auto& g : ideal.basis()) low = std::min(low, *g.min_variable());
  out.k = low - 1;
  if (low == 0) throw PreconditionError("x0 divides a minimal generator");
  const std::size_t upper = ideal.nvars() - low;
  for (unsigned e = 0;; ++e) {
    std::size_t count = 0;
    for (const auto& u : terms_of_degree(upper, e)) {
      std::vector<Term::Exponent> ex(ideal.nvars(), 0);
      for (std::size_t i = 0; i < upper; ++i) ex[low + i] = u[i];
      if (!ideal.contains(Term(std::move(ex)))) ++count;
    }
    if (count == 0) break;
    out.multiplicities.push_back(count);
    out.d = e;
  }
  return out;
}

std::vector<Term> normal_terms(const MonomialIdeal& ideal, unsigned d) {
  std::vector<Term> out;
  for (auto& t : terms_of_degree(ideal.nvars(), d))
    if (!ideal.contains(t)) out.push_back(std::move(t));
  return out;
}

std::vector<Term> ideal_terms(const MonomialIdeal& ideal, unsigned d) {
  std::vector<Term> out;
  for (auto& t : terms_of_degree(ideal.nvars(), d))
    if (ideal.contains(t)) out.push_back(std::move(t));
  return out;
}

}  // namespace relmark
