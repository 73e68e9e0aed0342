#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relmark/marked.hpp"
#include "relmark/monomial_ideal.hpp"
#include "relmark/polynomial.hpp"
#include "relmark/text.hpp"

namespace relmark {

/// Variables C_{head,eta} of a generic marked set: one per head term and per
/// term eta of the same degree outside the target ideal.
///
/// Numbering: heads in ascending DegRevLex order, and within one head the
/// tail terms in ascending lex order. Variable k is displayed as c{k+1}.
class ParameterRing {
 public:
  struct Entry {
    Term head;
    Term tail;
  };

  ParameterRing() = default;
  ParameterRing(std::size_t nvars, std::vector<Term> heads, const MonomialIdeal& target);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Head terms in parameter order.
  const std::vector<Term>& heads() const { return heads_; }
  std::optional<std::size_t> index_of(const Term& head, const Term& tail) const;
  RingContext names() const { return RingContext::parameters(entries_.size()); }

  /// h = x^head - sum_k c_k x^tail_k for every head.
  MarkedSet<ParamPoly> generic_set() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> heads_;
  std::vector<Entry> entries_;
};

/// Where a scheme generator comes from. `family`, `base` and `var` name the
/// reduced polynomial (see FamilyMember); `x0_power` is the power of x0
/// applied first; `source` indexes the input list Z for containment
/// generators; `x_term` is the term whose coefficient was taken.
struct Provenance {
  enum class Kind { MultipleOfHead, MultipleOfCommonTerm, OuterGenerator, Containment };
  Kind kind = Kind::MultipleOfHead;
  Term base;
  std::optional<std::size_t> var;
  unsigned x0_power = 0;
  std::optional<std::size_t> source;
  Term x_term;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(Provenance::Kind kind);

struct SchemeGenerator {
  ParamPoly polynomial;  ///< primitive, positive leading coefficient
  Provenance from;
};

/// An ideal in a parameter ring, produced by reducing a generic marked set.
struct SchemeIdeal {
  ParameterRing parameters;
  MarkedSet<ParamPoly> generic;
  /// Polynomials used by containment generators.
  std::vector<QPoly> inputs;
  /// Deduplicated; the first provenance found is kept.
  std::vector<SchemeGenerator> generators;

  std::vector<ParamPoly> polynomials() const;
  /// All generators vanish at the point.
  bool vanishes_at(const std::vector<Rational>& point) const;
};

/// Scheme of all marked bases over J: reduces x_i g for every generic g and
/// non-multiplicative x_i, and collects every x-coefficient of the normal form.
SchemeIdeal full_scheme_ideal(const MonomialIdeal& J);

/// For each f in Z, reduces x0^d f with d = max(0, t - deg f) by the generic
/// marked set over the truncation of J at t and collects the coefficients
/// of the normal form. Requires t >= rho(J) - 1 and homogeneous inputs.
SchemeIdeal containment_ideal(const MonomialIdeal& J, unsigned t, const std::vector<QPoly>& Z);

/// Sum of the two ideals above over the common parameter ring of J truncated
/// at t.
SchemeIdeal full_scheme_with_containment(const MonomialIdeal& J, unsigned t, const std::vector<QPoly>& Z);

/// Relative marked scheme: heads P_J \ P_I, the three reduction families,
/// coefficients of the terms outside I.
SchemeIdeal relative_scheme_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

/// Relative marked scheme of the truncations at t of saturated I and J.
/// The outer family runs over B_I \ P_J of the saturated ideals, each
/// generator multiplied by x0^{max(0, t - deg)}.
SchemeIdeal relative_scheme_ideal_truncated(const MonomialIdeal& I, const MonomialIdeal& J, unsigned t);

/// The marked set with parameters substituted.
MarkedSet<Rational> specialize(const MarkedSet<ParamPoly>& generic, const std::vector<Rational>& point);

/// Recomputes the generator named by `from`: rebuilds its input polynomial,
/// reduces it and normalizes the coefficient of `from.x_term`.
ParamPoly rerun(const SchemeIdeal& ideal, const Provenance& from);

}  // namespace relmark
