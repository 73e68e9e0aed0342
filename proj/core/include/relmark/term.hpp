#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace relmark {

/// A power product x0^a0 * ... * xn^an.
///
/// Exponents are stored without trailing zeros, so a Term does not know
/// the size of its ring: the term 1 is the same value in every ring, and
/// a term in x0..x2 compares equal to its image in x0..x5. Variable x0 is
/// the smallest variable; xn is the largest.
class Term {
 public:
  using Exponent = std::uint32_t;

  Term() = default;
  Term(std::initializer_list<Exponent> exponents);
  explicit Term(std::vector<Exponent> exponents);

  static Term variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
  void set(std::size_t i, Exponent e);

  /// One past the largest variable index with a positive exponent.
  std::size_t span() const { return exps_.size(); }
  std::span<const Exponent> exponents() const { return exps_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }

  /// Smallest index with a positive exponent; nullopt for the term 1.
  std::optional<std::size_t> min_variable() const;
  /// Largest index with a positive exponent; nullopt for the term 1.
  std::optional<std::size_t> max_variable() const;

  bool divides(const Term& other) const;
  Term operator*(const Term& other) const;
  Term& operator*=(const Term& other);
  /// Exact quotient; throws PreconditionError when `other` does not divide.
  Term operator/(const Term& other) const;
  Term lcm(const Term& other) const;
  Term gcd(const Term& other) const;
  /// Drops variable `index` (exponent set to zero).
  Term without(std::size_t index) const;

  friend bool operator==(const Term&, const Term&) = default;

  std::size_t hash() const;

 private:
  void normalize();

  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

enum class TermOrder { Lex, DegRevLex };

/// Lex compares exponents from the largest variable down; DegRevLex compares
/// degree first and then prefers the smaller exponent of the smallest variable.
std::strong_ordering compare(TermOrder order, const Term& s, const Term& t);

/// Strict-weak "greater" predicate, handy for sorting in descending order.
struct TermGreater {
  TermOrder order = TermOrder::DegRevLex;
  bool operator()(const Term& a, const Term& b) const { return compare(order, a, b) > 0; }
};

/// Indices 0..min(t), the multiplicative variables of t. Throws for t = 1.
std::vector<std::size_t> multiplicative_variables(const Term& t);

/// True iff t lies in the Pommaret cone of `base`, i.e. base | t and t/base
/// only involves variables <= min(base). The cone of 1 is every term.
bool in_pommaret_cone(const Term& base, const Term& t);

/// All terms of degree d in variables x0..x_{nvars-1}.
std::vector<Term> terms_of_degree(std::size_t nvars, unsigned d);

}  // namespace relmark

template <>
struct std::hash<relmark::Term> {
  std::size_t operator()(const relmark::Term& t) const noexcept { return t.hash(); }
};
