#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relmark/term.hpp"

namespace relmark {

/// A monomial ideal of K[x0..xn], held by its minimal generators
/// (the monomial basis), sorted in descending lex order.
class MonomialIdeal {
 public:
  /// The zero ideal of a ring with `nvars` variables.
  explicit MonomialIdeal(std::size_t nvars);
  /// The ideal generated by `gens`; the generators are minimalized.
  MonomialIdeal(std::size_t nvars, std::vector<Term> gens);

  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& basis() const& { return basis_; }
  std::vector<Term> basis() && { return std::move(basis_); }
  bool is_zero() const { return basis_.empty(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_one(); }
  unsigned max_generator_degree() const;

  bool contains(const Term& t) const;
  bool contains(const MonomialIdeal& other) const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  /// The colon ideal I : m.
  MonomialIdeal quotient(const Term& m) const;
  /// Image in a ring with more variables (the extension ideal).
  MonomialIdeal extended(std::size_t nvars) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Term> basis_;
};

/// Divisibility-minimal subset of `gens`, sorted descending lex, deduplicated.
std::vector<Term> minimalize(std::vector<Term> gens);

/// Generator-wise test: for every minimal generator x^a with i = min(x^a) and
/// every j > i, some x_j^s * x^a / x_i^{a_i} lies in the ideal.
bool is_quasi_stable(const MonomialIdeal& ideal);

/// Pommaret basis of a quasi-stable ideal: finitely many terms whose
/// Pommaret cones partition the terms of the ideal.
class PommaretBasis {
 public:
  PommaretBasis(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  /// Sorted in descending lex order.
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  /// Maximal degree of a basis term (the Castelnuovo-Mumford regularity).
  unsigned regularity() const;
  bool contains(const Term& t) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Involutive completion. Throws NotQuasiStable when the ideal fails the
/// quasi-stability test. `degree_cap` defaults to 2*(max generator degree)*(n+1);
/// exceeding it after the test passed is an internal error.
PommaretBasis pommaret_basis(const MonomialIdeal& ideal, std::optional<unsigned> degree_cap = std::nullopt);

/// The unique basis term whose cone contains t, or nullopt when t is not in
/// the ideal.
std::optional<Term> pommaret_divisor(const PommaretBasis& basis, const Term& t);

/// x0 set to 1 in every generator. Requires a quasi-stable ideal.
MonomialIdeal saturation(const MonomialIdeal& ideal);
bool is_saturated(const MonomialIdeal& ideal);

/// The ideal of all elements of degree >= t.
MonomialIdeal truncation(const MonomialIdeal& ideal, unsigned t);

/// Maximal degree of the Pommaret basis. Requires a quasi-stable ideal.
unsigned regularity(const MonomialIdeal& ideal);
/// 1 when no Pommaret basis term is divisible by x1, otherwise the maximal
/// degree of such terms.
unsigned rho(const MonomialIdeal& ideal);
unsigned rho(const PommaretBasis& basis);

/// Cohen-Macaulay test for quasi-stable ideals: with m the smallest minimal
/// variable over the Pommaret basis, some pure power of x_m lies in the ideal.
bool is_cohen_macaulay(const MonomialIdeal& ideal);

/// R/I as a free K[x0..xk]-module: k+1 is the smallest variable dividing a
/// minimal generator, multiplicities[e] counts the I-free terms of degree e
/// in x_{k+1}..xn, and d is the top such degree.
struct FreeModuleDecomposition {
  std::size_t k = 0;
  unsigned d = 0;
  std::vector<std::size_t> multiplicities;
};
FreeModuleDecomposition free_module_decomposition(const MonomialIdeal& ideal);

/// Terms of degree d (in the ideal's ring) not in the ideal, descending lex.
std::vector<Term> normal_terms(const MonomialIdeal& ideal, unsigned d);
/// Terms of degree d in the ideal, descending lex.
std::vector<Term> ideal_terms(const MonomialIdeal& ideal, unsigned d);

}  // namespace relmark
