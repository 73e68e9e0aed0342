#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "relmark/errors.hpp"
#include "relmark/monomial_ideal.hpp"
#include "relmark/polynomial.hpp"

namespace relmark {

/// head + tail, with head coefficient 1.
template <class C>
struct MarkedPolynomial {
  Term head;
  Polynomial<C> tail;

  Polynomial<C> polynomial() const { return tail + Polynomial<C>::monomial(head); }
  friend bool operator==(const MarkedPolynomial&, const MarkedPolynomial&) = default;
};

/// Marked polynomials whose heads have pairwise disjoint Pommaret cones.
/// Built through `over` (heads = P_J), `relative` (heads = P_J \ P_I) or
/// `unchecked`.
template <class C>
class MarkedSet {
 public:
  MarkedSet() = default;

  static MarkedSet unchecked(std::size_t nvars, std::vector<MarkedPolynomial<C>> polys) {
    MarkedSet s;
    s.nvars_ = nvars;
    s.polys_ = std::move(polys);
    std::sort(s.polys_.begin(), s.polys_.end(), [](const auto& a, const auto& b) {
      return compare(TermOrder::Lex, a.head, b.head) > 0;
    });
    for (std::size_t i = 1; i < s.polys_.size(); ++i)
      if (s.polys_[i].head == s.polys_[i - 1].head) throw PreconditionError("head terms must be pairwise distinct");
    return s;
  }

  /// A P_J-marked set: heads exactly the Pommaret basis of J, homogeneous,
  /// tails supported on terms outside J.
  static MarkedSet over(const MonomialIdeal& J, std::vector<MarkedPolynomial<C>> polys) {
    MarkedSet s = unchecked(J.nvars(), std::move(polys));
    s.check_heads(pommaret_basis(J).terms());
    s.check_tails(J);
    return s;
  }

  /// A P_J-marked set relative to I: heads exactly P_J \ P_I.
  static MarkedSet relative(const MonomialIdeal& I, const MonomialIdeal& J, std::vector<MarkedPolynomial<C>> polys) {
    if (!J.contains(I)) throw PreconditionError("relative marked sets need I contained in J");
    MarkedSet s = unchecked(J.nvars(), std::move(polys));
    const PommaretBasis PI = pommaret_basis(I);
    std::vector<Term> heads;
    for (const auto& t : pommaret_basis(J).terms())
      if (!PI.contains(t)) heads.push_back(t);
    s.check_heads(heads);
    s.check_tails(J);
    return s;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<MarkedPolynomial<C>>& polynomials() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  std::vector<Term> heads() const {
    std::vector<Term> h;
    for (const auto& f : polys_) h.push_back(f.head);
    return h;
  }

  /// The element whose head cone contains t, if any.
  const MarkedPolynomial<C>* divisor(const Term& t) const {
    for (const auto& f : polys_)
      if (in_pommaret_cone(f.head, t)) return &f;
    return nullptr;
  }

  const MarkedPolynomial<C>* find(const Term& head) const {
    for (const auto& f : polys_)
      if (f.head == head) return &f;
    return nullptr;
  }

 private:
  void check_heads(std::vector<Term> expected) const {
    std::sort(expected.begin(), expected.end(), TermGreater{TermOrder::Lex});
    if (heads() != expected) throw PreconditionError("head terms do not match the required Pommaret basis terms");
  }

  void check_tails(const MonomialIdeal& J) const {
    for (const auto& f : polys_) {
      for (const auto& [t, c] : f.tail) {
        if (t.degree() != f.head.degree()) throw PreconditionError("marked polynomials must be homogeneous");
        if (J.contains(t)) throw PreconditionError("tail term lies in the target ideal");
        if (t.span() > nvars_) throw PreconditionError("tail uses a variable outside the ring");
      }
    }
  }

  std::size_t nvars_ = 0;
  std::vector<MarkedPolynomial<C>> polys_;
};

/// Safety cap on reduction steps; reduction terminates on valid input.
inline constexpr std::size_t kDefaultReductionSteps = 5'000'000;

/// Full reduction by E* = { x^eta f : x^eta in the multiplicative variables of
/// Ht(f) }. Always rewrites the DegRevLex-largest reducible term. The result
/// has no term in any head cone.
template <class C>
Polynomial<C> reduce(const MarkedSet<C>& E, Polynomial<C> p, std::size_t* steps = nullptr,
                     std::size_t max_steps = kDefaultReductionSteps) {
  std::unordered_map<Term, const MarkedPolynomial<C>*> cache;
  auto divisor = [&](const Term& t) {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    return cache.emplace(t, E.divisor(t)).first->second;
  };
  std::size_t count = 0;
  while (true) {
    const std::pair<Term, C>* hit = nullptr;
    const MarkedPolynomial<C>* f = nullptr;
    for (const auto& v : p) {
      if ((f = divisor(v.first))) {
        hit = &v;
        break;
      }
    }
    if (!hit) break;
    if (++count > max_steps) throw BudgetExceeded("reduction exceeded its step cap");
    const Term shift = hit->first / f->head;
    const C lambda = -hit->second;
    // Subtracting lambda * shift * (head + tail): the head cancels exactly.
    p = p.without(hit->first).combine(f->tail, lambda, shift);
  }
  if (steps) *steps = count;
  return p;
}

template <class C>
bool all_terms_in(const Polynomial<C>& p, const MonomialIdeal& I) {
  return std::all_of(p.begin(), p.end(), [&](const auto& v) { return I.contains(v.first); });
}

/// Every x_i * f with x_i non-multiplicative for Ht(f) reduces to 0.
template <class C>
bool is_marked_basis(const MarkedSet<C>& F) {
  for (const auto& f : F.polynomials()) {
    const std::size_t m = f.head.is_one() ? F.nvars() : *f.head.min_variable();
    const Polynomial<C> full = f.polynomial();
    for (std::size_t i = m + 1; i < F.nvars(); ++i)
      if (!reduce(F, full.mul_term(Term::variable(i))).is_zero()) return false;
  }
  return true;
}

/// The three reduction families of a relative marked set H over I in J.
enum class Family { MultipleOfHead, MultipleOfCommonTerm, OuterGenerator };

/// One polynomial to reduce by H*, together with where it came from.
template <class C>
struct FamilyMember {
  Family family;
  Term base;                      ///< head, common Pommaret term, or generator of I
  std::optional<std::size_t> var; ///< multiplying variable (families i, ii)
  Polynomial<C> polynomial;
};

/// (i) x_i h for every head and non-multiplicative x_i; (ii) x_i x^a for
/// x^a in P_I and P_J; (iii) x^g for x^g in B_I \ P_J.
template <class C>
std::vector<FamilyMember<C>> relative_families(const MonomialIdeal& I, const MonomialIdeal& J, const MarkedSet<C>& H) {
  std::vector<FamilyMember<C>> out;
  const std::size_t nvars = J.nvars();
  for (const auto& h : H.polynomials()) {
    if (h.head.is_one()) continue;
    const Polynomial<C> full = h.polynomial();
    for (std::size_t i = *h.head.min_variable() + 1; i < nvars; ++i)
      out.push_back({Family::MultipleOfHead, h.head, i, full.mul_term(Term::variable(i))});
  }
  const PommaretBasis PI = pommaret_basis(I);
  const PommaretBasis PJ = pommaret_basis(J);
  for (const auto& a : PI.terms()) {
    if (!PJ.contains(a)) continue;
    for (std::size_t i = *a.min_variable() + 1; i < nvars; ++i)
      out.push_back({Family::MultipleOfCommonTerm, a, i, Polynomial<C>::monomial(a * Term::variable(i))});
  }
  for (const auto& g : I.basis()) {
    if (PJ.contains(g)) continue;
    out.push_back({Family::OuterGenerator, g, std::nullopt, Polynomial<C>::monomial(g)});
  }
  return out;
}

/// Every member of the three families reduces by H* into I.
template <class C>
bool is_relative_marked_basis(const MonomialIdeal& I, const MonomialIdeal& J, const MarkedSet<C>& H) {
  if (!J.contains(I)) throw PreconditionError("I is not contained in J");
  for (const auto& m : relative_families(I, J, H))
    if (!all_terms_in(reduce(H, m.polynomial), I)) return false;
  return true;
}

/// Normal form modulo the ideal generated by a marked basis.
template <class C>
Polynomial<C> normal_form_mod_I(const MarkedSet<C>& F, const Polynomial<C>& p) {
  if (!is_marked_basis(F)) throw PreconditionError("not a marked basis");
  return reduce(F, p);
}

/// Marks p on its unique support term lying in J and scales that term to 1.
/// Throws when p has no, or more than one, term in J.
MarkedPolynomial<Rational> mark_on(const MonomialIdeal& J, const QPoly& p);

enum class InterleaveOrder { FThenH, HThenF };

struct InterleavedResult {
  enum class Kind { FixedPoint, LoopDetected, RoundsExceeded };
  Kind kind = Kind::FixedPoint;
  QPoly value;
  std::size_t rounds = 0;
  /// Index into `history` of the polynomial the value repeats.
  std::optional<std::size_t> repeats;
  bool exact_repeat = false;
  /// value = factor * history[*repeats].
  std::optional<Rational> factor;
  std::vector<QPoly> history;
};

/// Alternates full reductions by F* and H*. A round is one reduction by each.
/// Reports a loop when a round's result is proportional to an earlier
/// polynomial (proportionality covers exact repeats, flagged separately).
InterleavedResult interleaved_reduce(const MarkedSet<Rational>& F, const MarkedSet<Rational>& H, const QPoly& p,
                                     InterleaveOrder order, std::size_t max_rounds);

}  // namespace relmark
