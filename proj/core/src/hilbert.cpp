#include "relmark/hilbert.hpp"

#include <algorithm>
#include <map>

#include "relmark/errors.hpp"
#include "relmark/text.hpp"

namespace relmark {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw PreconditionError("interpolation needs matching point lists");
  UPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis({Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    if (sgn(denom) == 0) throw PreconditionError("interpolation nodes must be distinct");
    acc = acc + basis * UPoly({ys[i] / denom});
  }
  return acc;
}

UPoly UPoly::binomial(long shift, unsigned k) {
  UPoly r({Rational(1)});
  Integer fact = 1;
  for (unsigned i = 0; i < k; ++i) {
    r = r * UPoly({Rational(shift - static_cast<long>(i)), Rational(1)});
    fact *= i + 1;
  }
  return r * UPoly({Rational(1) / Rational(fact)});
}

Rational UPoly::operator()(const Rational& z) const {
  Rational v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * z + c_[i];
  return v;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (i < c_.size() ? c_[i] : Rational(0)) + (i < o.c_.size() ? o.c_[i] : Rational(0));
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o * UPoly({Rational(-1)}); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

std::string UPoly::to_string(std::string_view var) const {
  const RingContext ring = RingContext::univariate(std::string(var));
  std::vector<std::pair<Term, Rational>> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) terms.emplace_back(Term::variable(0, static_cast<Term::Exponent>(i)), c_[i]);
  return format(QPoly::from_terms(std::move(terms)), ring);
}

UPoly UPoly::parse(std::string_view text, std::string_view var) {
  const QPoly p = parse_polynomial(text, RingContext::univariate(std::string(var)));
  std::vector<Rational> c;
  for (const auto& [t, v] : p) {
    if (c.size() <= t[0]) c.resize(t[0] + 1);
    c[t[0]] = v;
  }
  return UPoly(std::move(c));
}

namespace {

using Numerator = std::vector<Integer>;

void trim(Numerator& n) {
  while (!n.empty() && n.back() == 0) n.pop_back();
}

Numerator add(const Numerator& a, const Numerator& b, unsigned shift_b) {
  Numerator r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += b[i];
  trim(r);
  return r;
}

std::string key_of(const std::vector<Term>& gens) {
  std::string k;
  for (const auto& g : gens) {
    for (auto e : g.exponents()) k += std::to_string(e) + ',';
    k += ';';
  }
  return k;
}

class NumeratorRecursion {
 public:
  explicit NumeratorRecursion(std::size_t nvars) : nvars_(nvars) {}

  Numerator run(const MonomialIdeal& I) {
    if (I.is_zero()) return {1};
    if (I.is_unit()) return {};
    const std::string key = key_of(I.basis());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Numerator result;
    // Pivot on the largest variable of a non-linear generator.
    std::optional<std::size_t> pivot;
    for (const auto& g : I.basis())
      if (g.degree() > 1) pivot = std::max(pivot.value_or(0), *g.max_variable());
    if (!pivot) {
      // Generated by k variables: (1-z)^k.
      result = {1};
      for (std::size_t i = 0; i < I.basis().size(); ++i) result = times_one_minus_z(result);
    } else {
      const Term x = Term::variable(*pivot);
      const Numerator a = run(I + MonomialIdeal(nvars_, {x}));
      const Numerator b = run(I.quotient(x));
      result = add(a, b, 1);
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  static Numerator times_one_minus_z(const Numerator& n) {
    Numerator r(n.size() + 1, 0);
    for (std::size_t i = 0; i < n.size(); ++i) {
      r[i] += n[i];
      r[i + 1] -= n[i];
    }
    trim(r);
    return r;
  }

  std::size_t nvars_;
  std::map<std::string, Numerator> memo_;
};

Integer binom(long m, unsigned k) {
  if (m < static_cast<long>(k) || m < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), k);
  return r;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const MonomialIdeal& ideal) {
  return NumeratorRecursion(ideal.nvars()).run(ideal);
}

Integer HilbertData::function(unsigned d) const {
  Integer v = 0;
  const unsigned n = static_cast<unsigned>(nvars) - 1;
  for (std::size_t k = 0; k < numerator.size(); ++k)
    v += numerator[k] * binom(static_cast<long>(d) - static_cast<long>(k) + n, n);
  return v;
}

std::vector<Integer> HilbertData::function_values(unsigned up_to) const {
  std::vector<Integer> out;
  for (unsigned d = 0; d <= up_to; ++d) out.push_back(function(d));
  return out;
}

HilbertData hilbert_data(const MonomialIdeal& ideal) {
  HilbertData h;
  h.nvars = ideal.nvars();
  h.numerator = hilbert_numerator(ideal);
  const long n = static_cast<long>(ideal.nvars()) - 1;
  const long top = static_cast<long>(h.numerator.size()) - 1;
  // binom(d - k + n, n) is polynomial in d once d >= k - n.
  unsigned from = static_cast<unsigned>(std::max(0L, top - n));
  if (is_quasi_stable(ideal) && !ideal.is_zero()) from = std::max(from, regularity(ideal));
  h.stable_from = from;
  std::vector<Rational> xs, ys;
  for (long i = 0; i <= n + 1; ++i) {
    xs.emplace_back(static_cast<long>(from) + i);
    ys.emplace_back(h.function(from + static_cast<unsigned>(i)));
  }
  h.polynomial = UPoly::interpolate(xs, ys);
  return h;
}

unsigned gotzmann_number(const UPoly& p) {
  UPoly rest = p;
  unsigned r = 0;
  constexpr unsigned kLimit = 1u << 22;
  while (!rest.is_zero()) {
    if (sgn(rest.leading()) <= 0) throw PreconditionError("polynomial " + p.to_string() + " has no Gotzmann representation");
    if (r >= kLimit) throw BudgetExceeded("Gotzmann representation too long");
    ++r;
    const unsigned a = static_cast<unsigned>(rest.degree());
    rest = rest - UPoly::binomial(static_cast<long>(a) - static_cast<long>(r) + 1, a);
  }
  return r;
}

}  // namespace relmark
