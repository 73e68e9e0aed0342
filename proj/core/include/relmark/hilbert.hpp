#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relmark/monomial_ideal.hpp"
#include "relmark/rational.hpp"

namespace relmark {

/// Polynomial in one variable z with rational coefficients, low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  /// Interpolating polynomial through (xs[i], ys[i]); xs pairwise distinct.
  static UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
  /// binom(z + shift, k) as a polynomial in z.
  static UPoly binomial(long shift, unsigned k);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& z) const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;

  /// `5*z - 3` style text.
  std::string to_string(std::string_view var = "z") const;
  /// Inverse of to_string; accepts any polynomial expression in `var`.
  static UPoly parse(std::string_view text, std::string_view var = "z");

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Hilbert series numerator N(z) of R/I, with HS = N(z) / (1-z)^{nvars}.
std::vector<Integer> hilbert_numerator(const MonomialIdeal& ideal);

struct HilbertData {
  std::size_t nvars = 0;
  std::vector<Integer> numerator;
  /// Degree from which the Hilbert function agrees with the polynomial.
  unsigned stable_from = 0;
  UPoly polynomial;

  /// dim_K (R/I)_d.
  Integer function(unsigned d) const;
  std::vector<Integer> function_values(unsigned up_to) const;
};

HilbertData hilbert_data(const MonomialIdeal& ideal);
inline UPoly hilbert_polynomial(const MonomialIdeal& ideal) { return hilbert_data(ideal).polynomial; }

/// Length r of the representation p(z) = sum_{i=1..r} binom(z + a_i - i + 1, a_i)
/// with a_1 >= ... >= a_r >= 0. Throws PreconditionError when p admits none.
unsigned gotzmann_number(const UPoly& p);

}  // namespace relmark
