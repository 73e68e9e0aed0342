#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relmark/polynomial.hpp"

namespace relmark {

/// Resource caps for Buchberger's algorithm. Hitting one raises
/// BudgetExceeded; no partial result is ever returned.
struct GroebnerBudget {
  std::size_t max_pairs = 2'000'000;
  /// Bit size of any numerator or denominator met during reduction.
  std::size_t max_coefficient_bits = 1u << 16;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of an ideal in Q[c1..cm]: monic, interreduced,
/// sorted by ascending leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, TermOrder order, std::vector<ParamPoly> gens);

  std::size_t nvars() const { return nvars_; }
  TermOrder order() const { return order_; }
  const std::vector<ParamPoly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }
  std::vector<Term> leading_terms() const;

  /// Normal form of p (fully reduced).
  ParamPoly normal_form(const ParamPoly& p) const;
  bool contains(const ParamPoly& p) const { return normal_form(p).is_zero(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  std::size_t nvars_;
  TermOrder order_;
  std::vector<ParamPoly> gens_;
};

/// Leading term of a nonzero polynomial under `order`.
Term leading_term(const ParamPoly& p, TermOrder order);

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller pair criteria.
GroebnerBasis buchberger(const std::vector<ParamPoly>& gens, std::size_t nvars, TermOrder order,
                         const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr);

/// Krull dimension of Q[c1..cm]/I: the largest set of variables containing
/// the support of no leading term. -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);
int krull_dimension(const std::vector<ParamPoly>& gens, std::size_t nvars, const GroebnerBudget& budget = {});

/// m minus the rank of the linear parts. Throws PreconditionError when a
/// generator has a nonzero constant term.
std::size_t tangent_dimension_at_origin(const std::vector<ParamPoly>& gens, std::size_t nvars);

/// Number of standard monomials. Throws PreconditionError unless the ideal is
/// zero-dimensional.
std::size_t multiplicity_zero_dim(const GroebnerBasis& gb);

struct CoordinateSubspace {
  bool is_coordinate = false;
  /// Indices of the parameters not among the generators (when is_coordinate).
  std::vector<std::size_t> free_parameters;
};

/// True iff the reduced generators are a set of parameter variables.
CoordinateSubspace detect_coordinate_subspace(const std::vector<ParamPoly>& gens, std::size_t nvars,
                                              const GroebnerBudget& budget = {});

struct SchemeAnalysis {
  std::size_t parameters = 0;
  int krull_dimension = 0;
  std::size_t tangent_dimension_at_origin = 0;
  std::optional<std::size_t> multiplicity;
  CoordinateSubspace coordinate;
  std::size_t groebner_size = 0;
};

SchemeAnalysis analyze(const std::vector<ParamPoly>& gens, std::size_t nvars, const GroebnerBudget& budget = {});

}  // namespace relmark
