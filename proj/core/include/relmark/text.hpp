#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relmark/polynomial.hpp"

namespace relmark {

/// Variable names of a polynomial ring. Index 0 is the smallest variable.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> names);

  /// x0..x_{nvars-1}. With `leading_w`, index 0 is an extra variable `w`
  /// ranked below x0 and xk lives at index k+1.
  static RingContext x_ring(std::size_t nvars, bool leading_w = false);
  /// c1..cm, where ck lives at index k-1.
  static RingContext parameters(std::size_t m);
  static RingContext univariate(std::string name);

  std::size_t nvars() const { return names_.size(); }
  /// Largest variable index (the `n` of x0..xn).
  std::size_t n() const { return names_.size() - 1; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Throws PreconditionError if t uses a variable outside this ring.
  void check(const Term& t) const;
  /// compare() after checking both terms belong to this ring.
  std::strong_ordering compare_terms(TermOrder order, const Term& s, const Term& t) const;

  /// A ring holding this ring's variables followed by `other`'s.
  RingContext joined(const RingContext& other) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::string format_term(const Term& t, const RingContext& ring);
std::string format(const QPoly& p, const RingContext& ring);
/// Parameter-coefficient polynomial; composite coefficients are parenthesized.
std::string format(const ParamCoeffPoly& p, const RingContext& xring, const RingContext& params);

/// Parses `x3^2*x2 - 16*x2^3` style input (rational numerals, `^`, optional
/// `*`, parentheses, unary minus). Throws ParseError.
QPoly parse_polynomial(std::string_view text, const RingContext& ring);
Term parse_term(std::string_view text, const RingContext& ring);
/// Comma-separated list; an empty or blank string yields an empty list.
std::vector<QPoly> parse_polynomial_list(std::string_view text, const RingContext& ring);
std::vector<Term> parse_term_list(std::string_view text, const RingContext& ring);
ParamCoeffPoly parse_param_polynomial(std::string_view text, const RingContext& xring,
                                      const RingContext& params);

/// Largest index k such that `xk` appears in the text, or nullopt.
std::optional<std::size_t> max_x_index(std::string_view text);
/// Largest k with `ck` in the text, or nullopt.
std::optional<std::size_t> max_c_index(std::string_view text);

}  // namespace relmark
