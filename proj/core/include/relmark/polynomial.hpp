#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "relmark/rational.hpp"
#include "relmark/term.hpp"

namespace relmark {

template <class C>
class Polynomial;

/// Arithmetic hooks for the two coefficient rings in use: Rational and
/// Polynomial<Rational> (the parameter ring).
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
};

/// Sparse polynomial with terms kept in descending DegRevLex order and no
/// stored zero coefficients. Values are immutable in spirit: every operator
/// returns a fresh polynomial.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using value_type = std::pair<Term, C>;

  Polynomial() = default;

  static Polynomial monomial(Term t, C c = CoeffTraits<C>::one()) {
    Polynomial p;
    if (!CoeffTraits<C>::is_zero(c)) p.terms_.emplace_back(std::move(t), std::move(c));
    return p;
  }

  static Polynomial constant(C c) { return monomial(Term{}, std::move(c)); }

  /// Sorts, merges duplicate terms and drops zeros.
  static Polynomial from_terms(std::vector<value_type> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const value_type& a, const value_type& b) { return greater(a.first, b.first); });
    Polynomial p;
    for (auto& [t, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t) {
        p.terms_.back().second = p.terms_.back().second + c;
        if (CoeffTraits<C>::is_zero(p.terms_.back().second)) p.terms_.pop_back();
        continue;
      }
      if (!CoeffTraits<C>::is_zero(c)) p.terms_.emplace_back(std::move(t), std::move(c));
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<value_type>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Largest term under DegRevLex; precondition: nonzero.
  const value_type& leading() const { return terms_.front(); }

  C coefficient(const Term& t) const {
    auto it = find(t);
    return it == terms_.end() ? C{} : it->second;
  }

  bool contains(const Term& t) const { return find(t) != terms_.end(); }

  std::vector<Term> support() const {
    std::vector<Term> s;
    s.reserve(terms_.size());
    for (const auto& [t, c] : terms_) s.push_back(t);
    return s;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const value_type& v) { return v.first.degree() == terms_.front().first.degree(); });
  }

  /// Common degree of a homogeneous polynomial; nullopt for 0 or mixed degrees.
  std::optional<unsigned> homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().first.degree();
  }

  /// Largest variable index used plus one.
  std::size_t span() const {
    std::size_t s = 0;
    for (const auto& [t, c] : terms_) s = std::max(s, t.span());
    return s;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, CoeffTraits<C>::one(), Term{}); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, -CoeffTraits<C>::one(), Term{}); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const C& lambda) const {
    if (CoeffTraits<C>::is_zero(lambda)) return {};
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [t, c] : terms_) {
      C v = c * lambda;
      if (!CoeffTraits<C>::is_zero(v)) r.terms_.emplace_back(t, std::move(v));
    }
    return r;
  }

  Polynomial mul_term(const Term& m) const {
    Polynomial r = *this;
    for (auto& [t, c] : r.terms_) t *= m;
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    const Polynomial& small = size() <= o.size() ? *this : o;
    const Polynomial& big = size() <= o.size() ? o : *this;
    for (const auto& [t, c] : small.terms_) r = r.combine(big, c, t);
    return r;
  }

  /// this + lambda * shift * f, computed by a single merge.
  Polynomial combine(const Polynomial& f, const C& lambda, const Term& shift) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + f.terms_.size());
    auto a = terms_.begin();
    auto b = f.terms_.begin();
    const bool plain_shift = shift.is_one();
    while (a != terms_.end() || b != f.terms_.end()) {
      if (b == f.terms_.end()) {
        r.terms_.push_back(*a++);
        continue;
      }
      Term bt = plain_shift ? b->first : b->first * shift;
      if (a == terms_.end()) {
        C v = b->second * lambda;
        if (!CoeffTraits<C>::is_zero(v)) r.terms_.emplace_back(std::move(bt), std::move(v));
        ++b;
        continue;
      }
      const auto cmp = compare(TermOrder::DegRevLex, a->first, bt);
      if (cmp > 0) {
        r.terms_.push_back(*a++);
      } else if (cmp < 0) {
        C v = b->second * lambda;
        if (!CoeffTraits<C>::is_zero(v)) r.terms_.emplace_back(std::move(bt), std::move(v));
        ++b;
      } else {
        C v = a->second + b->second * lambda;
        if (!CoeffTraits<C>::is_zero(v)) r.terms_.emplace_back(std::move(bt), std::move(v));
        ++a;
        ++b;
      }
    }
    return r;
  }

  /// Removes the term t (no-op when absent).
  Polynomial without(const Term& t) const {
    Polynomial r = *this;
    auto it = r.find_mut(t);
    if (it != r.terms_.end()) r.terms_.erase(it);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& fn) const {
    using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
    std::vector<std::pair<Term, D>> out;
    out.reserve(terms_.size());
    for (const auto& [t, c] : terms_) out.emplace_back(t, fn(c));
    return Polynomial<D>::from_terms(std::move(out));
  }

  /// Keeps the terms satisfying pred.
  template <class Pred>
  Polynomial filter(Pred&& pred) const {
    Polynomial r;
    for (const auto& v : terms_)
      if (pred(v.first)) r.terms_.push_back(v);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  static bool greater(const Term& a, const Term& b) { return compare(TermOrder::DegRevLex, a, b) > 0; }

  auto find(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const value_type& v, const Term& key) { return greater(v.first, key); });
    return (it != terms_.end() && it->first == t) ? it : terms_.end();
  }
  auto find_mut(const Term& t) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const value_type& v, const Term& key) { return greater(v.first, key); });
    return (it != terms_.end() && it->first == t) ? it : terms_.end();
  }

  std::vector<value_type> terms_;
};

using QPoly = Polynomial<Rational>;
/// Element of the parameter ring Q[c1..cm]; reused as a coefficient ring.
using ParamPoly = Polynomial<Rational>;
/// Polynomial in x0..xn with coefficients in the parameter ring.
using ParamCoeffPoly = Polynomial<ParamPoly>;

template <>
struct CoeffTraits<ParamPoly> {
  static ParamPoly one() { return ParamPoly::constant(Rational(1)); }
  static bool is_zero(const ParamPoly& c) { return c.is_zero(); }
};

/// Value of a parameter polynomial at a rational point (index i ↦ point[i]).
Rational evaluate(const ParamPoly& p, const std::vector<Rational>& point);

/// Substitutes a rational point into every coefficient.
QPoly specialize(const ParamCoeffPoly& p, const std::vector<Rational>& point);

/// Lifts rational coefficients into the parameter ring.
ParamCoeffPoly lift(const QPoly& p);

/// Divides by the rational content: integer coefficients, gcd 1, positive
/// leading coefficient. Zero stays zero.
QPoly primitive_part(const QPoly& p);

/// Same polynomial up to a nonzero rational factor; also returns that factor
/// (b = factor * a).
std::optional<Rational> proportional(const QPoly& a, const QPoly& b);

}  // namespace relmark
