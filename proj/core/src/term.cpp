#include "relmark/term.hpp"

#include <algorithm>
#include <numeric>

#include "relmark/errors.hpp"

namespace relmark {

Term::Term(std::initializer_list<Exponent> exponents) : exps_(exponents) { normalize(); }

Term::Term(std::vector<Exponent> exponents) : exps_(std::move(exponents)) { normalize(); }

Term Term::variable(std::size_t index, Exponent power) {
  std::vector<Exponent> e(index + 1, 0);
  e[index] = power;
  return Term(std::move(e));
}

void Term::normalize() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

void Term::set(std::size_t i, Exponent e) {
  if (i >= exps_.size()) {
    if (e == 0) return;
    exps_.resize(i + 1, 0);
  }
  exps_[i] = e;
  normalize();
}

std::optional<std::size_t> Term::min_variable() const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) return i;
  return std::nullopt;
}

std::optional<std::size_t> Term::max_variable() const {
  if (exps_.empty()) return std::nullopt;
  return exps_.size() - 1;
}

bool Term::divides(const Term& other) const {
  if (exps_.size() > other.exps_.size() || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Term Term::operator*(const Term& other) const {
  Term r = *this;
  r *= other;
  return r;
}

Term& Term::operator*=(const Term& other) {
  if (other.exps_.size() > exps_.size()) exps_.resize(other.exps_.size(), 0);
  for (std::size_t i = 0; i < other.exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Term Term::operator/(const Term& other) const {
  if (!other.divides(*this)) throw PreconditionError("term division is not exact");
  Term r = *this;
  for (std::size_t i = 0; i < other.exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.normalize();
  return r;
}

Term Term::lcm(const Term& other) const {
  std::vector<Exponent> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max((*this)[i], other[i]);
  return Term(std::move(e));
}

Term Term::gcd(const Term& other) const {
  std::vector<Exponent> e(std::min(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Term(std::move(e));
}

Term Term::without(std::size_t index) const {
  Term r = *this;
  r.set(index, 0);
  return r;
}

std::size_t Term::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Exponent e : exps_) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

std::strong_ordering compare(TermOrder order, const Term& s, const Term& t) {
  if (order == TermOrder::DegRevLex) {
    if (s.degree() != t.degree()) return s.degree() <=> t.degree();
    const std::size_t n = std::max(s.span(), t.span());
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] != t[i]) return t[i] <=> s[i];
    return std::strong_ordering::equal;
  }
  const std::size_t n = std::max(s.span(), t.span());
  for (std::size_t i = n; i-- > 0;)
    if (s[i] != t[i]) return s[i] <=> t[i];
  return std::strong_ordering::equal;
}

std::vector<std::size_t> multiplicative_variables(const Term& t) {
  const auto m = t.min_variable();
  if (!m) throw PreconditionError("the term 1 has no minimal variable");
  std::vector<std::size_t> out(*m + 1);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool in_pommaret_cone(const Term& base, const Term& t) {
  if (!base.divides(t)) return false;
  const auto m = base.min_variable();
  if (!m) return true;
  for (std::size_t i = *m + 1; i < t.span(); ++i)
    if (t[i] != base[i]) return false;
  return true;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<Term::Exponent>& cur,
               std::vector<Term>& out) {
  if (var == 0) {
    cur[0] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(var - 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Term> terms_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Term> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<Term::Exponent> cur(nvars, 0);
  enumerate(nvars - 1, d, cur, out);
  return out;
}

}  // namespace relmark
