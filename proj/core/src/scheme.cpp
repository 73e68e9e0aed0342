#include "relmark/scheme.hpp"

#include <algorithm>

#include "relmark/errors.hpp"

namespace relmark {

ParameterRing::ParameterRing(std::size_t nvars, std::vector<Term> heads, const MonomialIdeal& target)
    : nvars_(nvars), heads_(std::move(heads)) {
  std::sort(heads_.begin(), heads_.end(),
            [](const Term& a, const Term& b) { return compare(TermOrder::DegRevLex, a, b) < 0; });
  for (const auto& h : heads_) {
    std::vector<Term> tails = normal_terms(target, h.degree());  // descending lex
    std::reverse(tails.begin(), tails.end());
    for (auto& t : tails) entries_.push_back({h, std::move(t)});
  }
}

std::optional<std::size_t> ParameterRing::index_of(const Term& head, const Term& tail) const {
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k].head == head && entries_[k].tail == tail) return k;
  return std::nullopt;
}

MarkedSet<ParamPoly> ParameterRing::generic_set() const {
  std::vector<MarkedPolynomial<ParamPoly>> polys;
  for (const auto& h : heads_) {
    std::vector<std::pair<Term, ParamPoly>> tail;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (entries_[k].head == h)
        tail.emplace_back(entries_[k].tail, ParamPoly::monomial(Term::variable(k), Rational(-1)));
    polys.push_back({h, ParamCoeffPoly::from_terms(std::move(tail))});
  }
  return MarkedSet<ParamPoly>::unchecked(nvars_, std::move(polys));
}

std::string to_string(Provenance::Kind kind) {
  switch (kind) {
    case Provenance::Kind::MultipleOfHead: return "head-multiple";
    case Provenance::Kind::MultipleOfCommonTerm: return "common-term-multiple";
    case Provenance::Kind::OuterGenerator: return "outer-generator";
    case Provenance::Kind::Containment: return "containment";
  }
  return "unknown";
}

std::vector<ParamPoly> SchemeIdeal::polynomials() const {
  std::vector<ParamPoly> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.polynomial);
  return out;
}

bool SchemeIdeal::vanishes_at(const std::vector<Rational>& point) const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const SchemeGenerator& g) { return is_zero(evaluate(g.polynomial, point)); });
}

MarkedSet<Rational> specialize(const MarkedSet<ParamPoly>& generic, const std::vector<Rational>& point) {
  std::vector<MarkedPolynomial<Rational>> polys;
  for (const auto& f : generic.polynomials()) polys.push_back({f.head, specialize(f.tail, point)});
  return MarkedSet<Rational>::unchecked(generic.nvars(), std::move(polys));
}

namespace {

Provenance::Kind kind_of(Family f) {
  switch (f) {
    case Family::MultipleOfHead: return Provenance::Kind::MultipleOfHead;
    case Family::MultipleOfCommonTerm: return Provenance::Kind::MultipleOfCommonTerm;
    case Family::OuterGenerator: return Provenance::Kind::OuterGenerator;
  }
  return Provenance::Kind::MultipleOfHead;
}

/// Collects normalized, deduplicated coefficients.
class Collector {
 public:
  explicit Collector(SchemeIdeal& target) : target_(target) {
    for (const auto& g : target_.generators) seen_.push_back(g.polynomial);
  }

  template <class Keep>
  void add(const ParamCoeffPoly& reduced, Provenance from, Keep&& keep) {
    for (const auto& [t, c] : reduced) {
      if (!keep(t)) continue;
      ParamPoly g = primitive_part(c);
      if (std::find(seen_.begin(), seen_.end(), g) != seen_.end()) continue;
      seen_.push_back(g);
      from.x_term = t;
      target_.generators.push_back({std::move(g), from});
    }
  }

 private:
  SchemeIdeal& target_;
  std::vector<ParamPoly> seen_;
};

ParamCoeffPoly input_of(const SchemeIdeal& ideal, const Provenance& from) {
  const Term shift = Term::variable(0, from.x0_power);
  switch (from.kind) {
    case Provenance::Kind::MultipleOfHead: {
      const auto* h = ideal.generic.find(from.base);
      if (!h || !from.var) throw PreconditionError("provenance names no generic polynomial");
      return h->polynomial().mul_term(Term::variable(*from.var));
    }
    case Provenance::Kind::MultipleOfCommonTerm:
      if (!from.var) throw PreconditionError("provenance lacks its variable");
      return ParamCoeffPoly::monomial(from.base * Term::variable(*from.var));
    case Provenance::Kind::OuterGenerator:
      return ParamCoeffPoly::monomial(from.base * shift);
    case Provenance::Kind::Containment:
      if (!from.source || *from.source >= ideal.inputs.size()) throw PreconditionError("provenance names no input");
      return lift(ideal.inputs[*from.source]).mul_term(shift);
  }
  return {};
}

void require_quasi_stable(const MonomialIdeal& I, const char* what) {
  if (!is_quasi_stable(I)) throw NotQuasiStable(std::string(what) + " is not quasi-stable");
}

std::vector<Term> relative_heads(const MonomialIdeal& I, const MonomialIdeal& J) {
  const PommaretBasis PI = pommaret_basis(I);
  std::vector<Term> heads;
  for (const auto& t : pommaret_basis(J).terms())
    if (!PI.contains(t)) heads.push_back(t);
  return heads;
}

/// Families (i) and (ii) of the relative construction over I in J, reduced,
/// with coefficients of terms outside `outside` collected.
void collect_inner_families(SchemeIdeal& out, const MonomialIdeal& I, const MonomialIdeal& J,
                            const MonomialIdeal& outside, Collector& collect) {
  for (const auto& m : relative_families(I, J, out.generic)) {
    if (m.family == Family::OuterGenerator) continue;
    Provenance from{kind_of(m.family), m.base, m.var, 0, std::nullopt, Term{}};
    collect.add(reduce(out.generic, m.polynomial), from, [&](const Term& t) { return !outside.contains(t); });
  }
}

}  // namespace

SchemeIdeal full_scheme_ideal(const MonomialIdeal& J) {
  require_quasi_stable(J, "J");
  SchemeIdeal out;
  out.parameters = ParameterRing(J.nvars(), pommaret_basis(J).terms(), J);
  out.generic = out.parameters.generic_set();
  Collector collect(out);
  for (const auto& g : out.generic.polynomials()) {
    if (g.head.is_one()) continue;
    const ParamCoeffPoly full = g.polynomial();
    for (std::size_t i = *g.head.min_variable() + 1; i < J.nvars(); ++i) {
      Provenance from{Provenance::Kind::MultipleOfHead, g.head, i, 0, std::nullopt, Term{}};
      collect.add(reduce(out.generic, full.mul_term(Term::variable(i))), from, [](const Term&) { return true; });
    }
  }
  return out;
}

namespace {

void check_threshold(const MonomialIdeal& J, unsigned t) {
  if (static_cast<long>(t) < static_cast<long>(rho(J)) - 1)
    throw PreconditionError("t = " + std::to_string(t) + " is below rho - 1 = " + std::to_string(rho(J) - 1));
}

void add_containment(SchemeIdeal& out, unsigned t, const std::vector<QPoly>& Z) {
  Collector collect(out);
  for (std::size_t k = 0; k < Z.size(); ++k) {
    const auto deg = Z[k].homogeneous_degree();
    if (!Z[k].is_zero() && !deg) throw PreconditionError("containment inputs must be homogeneous");
    if (Z[k].span() > out.parameters.nvars()) throw PreconditionError("input uses a variable outside the ring");
    out.inputs.push_back(Z[k]);
    if (!deg) continue;
    const unsigned d = t > *deg ? t - *deg : 0;
    Provenance from{Provenance::Kind::Containment, Term{}, std::nullopt, d, k, Term{}};
    collect.add(reduce(out.generic, input_of(out, from)), from, [](const Term&) { return true; });
  }
}

}  // namespace

SchemeIdeal containment_ideal(const MonomialIdeal& J, unsigned t, const std::vector<QPoly>& Z) {
  require_quasi_stable(J, "J");
  check_threshold(J, t);
  const MonomialIdeal Jt = truncation(J, t);
  SchemeIdeal out;
  out.parameters = ParameterRing(J.nvars(), pommaret_basis(Jt).terms(), Jt);
  out.generic = out.parameters.generic_set();
  add_containment(out, t, Z);
  return out;
}

SchemeIdeal full_scheme_with_containment(const MonomialIdeal& J, unsigned t, const std::vector<QPoly>& Z) {
  require_quasi_stable(J, "J");
  check_threshold(J, t);
  SchemeIdeal out = full_scheme_ideal(truncation(J, t));
  add_containment(out, t, Z);
  return out;
}

SchemeIdeal relative_scheme_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_quasi_stable(I, "I");
  require_quasi_stable(J, "J");
  if (!J.contains(I)) throw PreconditionError("I is not contained in J");
  SchemeIdeal out;
  out.parameters = ParameterRing(J.nvars(), relative_heads(I, J), J);
  out.generic = out.parameters.generic_set();
  Collector collect(out);
  collect_inner_families(out, I, J, I, collect);
  const PommaretBasis PJ = pommaret_basis(J);
  for (const auto& g : I.basis()) {
    if (PJ.contains(g)) continue;
    Provenance from{Provenance::Kind::OuterGenerator, g, std::nullopt, 0, std::nullopt, Term{}};
    collect.add(reduce(out.generic, input_of(out, from)), from, [&](const Term& t) { return !I.contains(t); });
  }
  return out;
}

SchemeIdeal relative_scheme_ideal_truncated(const MonomialIdeal& I, const MonomialIdeal& J, unsigned t) {
  require_quasi_stable(I, "I");
  require_quasi_stable(J, "J");
  if (!is_saturated(I) || !is_saturated(J)) throw PreconditionError("both ideals must be saturated");
  if (!J.contains(I)) throw PreconditionError("I is not contained in J");
  check_threshold(J, t);
  const MonomialIdeal It = truncation(I, t);
  const MonomialIdeal Jt = truncation(J, t);
  SchemeIdeal out;
  out.parameters = ParameterRing(J.nvars(), relative_heads(It, Jt), Jt);
  out.generic = out.parameters.generic_set();
  Collector collect(out);
  collect_inner_families(out, It, Jt, I, collect);
  const PommaretBasis PJ = pommaret_basis(J);
  for (const auto& g : I.basis()) {
    if (PJ.contains(g)) continue;
    const unsigned d = t > g.degree() ? t - g.degree() : 0;
    Provenance from{Provenance::Kind::OuterGenerator, g, std::nullopt, d, std::nullopt, Term{}};
    collect.add(reduce(out.generic, input_of(out, from)), from, [&](const Term& x) { return !I.contains(x); });
  }
  return out;
}

ParamPoly rerun(const SchemeIdeal& ideal, const Provenance& from) {
  return primitive_part(reduce(ideal.generic, input_of(ideal, from)).coefficient(from.x_term));
}

}  // namespace relmark
