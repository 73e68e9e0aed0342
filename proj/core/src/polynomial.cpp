#include "relmark/polynomial.hpp"

#include "relmark/errors.hpp"

namespace relmark {

Rational evaluate(const ParamPoly& p, const std::vector<Rational>& point) {
  Rational sum(0);
  for (const auto& [t, c] : p) {
    if (t.span() > point.size()) throw PreconditionError("evaluation point has too few coordinates");
    Rational v = c;
    for (std::size_t i = 0; i < t.span(); ++i)
      for (Term::Exponent e = 0; e < t[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

QPoly specialize(const ParamCoeffPoly& p, const std::vector<Rational>& point) {
  return p.map_coefficients([&](const ParamPoly& c) { return evaluate(c, point); });
}

ParamCoeffPoly lift(const QPoly& p) {
  return p.map_coefficients([](const Rational& c) { return ParamPoly::constant(c); });
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [t, c] : p) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(p.leading().second) < 0) factor = -factor;
  return p.scaled(factor);
}

std::optional<Rational> proportional(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size() || a.is_zero()) return std::nullopt;
  const Rational factor = b.leading().second / a.leading().second;
  auto ia = a.begin();
  for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second * factor != ib->second) return std::nullopt;
  }
  return factor;
}

}  // namespace relmark
