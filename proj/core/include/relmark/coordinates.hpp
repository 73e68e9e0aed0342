#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "relmark/linalg.hpp"
#include "relmark/marked.hpp"
#include "relmark/monomial_ideal.hpp"

namespace relmark {

/// Index k such that x_{k+1}..x_n are the variables dividing some minimal
/// generator of I (k = n when no generator involves a variable).
std::size_t lower_block(const MonomialIdeal& I);

/// x_j -> sum_{t<=k} g[j][t] x_t for j <= k, identity on x_{k+1}..x_n.
class LowerTriangularChange {
 public:
  /// Throws PreconditionError when g is not square of size k+1 <= nvars or
  /// is singular.
  LowerTriangularChange(std::size_t nvars, Matrix g);
  static LowerTriangularChange identity(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  std::size_t k() const { return g_.size() - 1; }
  const Matrix& matrix() const { return g_; }
  bool is_identity() const;
  LowerTriangularChange inverse() const;

  /// Image of x_j.
  QPoly image(std::size_t j) const;

 private:
  std::size_t nvars_;
  Matrix g_;
};

/// Substitutes, expands and drops the terms lying in I.
QPoly apply_change(const LowerTriangularChange& g, const QPoly& p, const MonomialIdeal& I);
std::vector<QPoly> apply_change(const LowerTriangularChange& g, const std::vector<QPoly>& F, const MonomialIdeal& I);

/// Row echelon form of the I-free parts of F over the degree-q terms ordered
/// by descending degrevlex: pivots become heads with coefficient 1, tails
/// avoid every pivot. Zero rows vanish. Throws PreconditionError unless all
/// inputs are homogeneous of one degree.
std::vector<MarkedPolynomial<Rational>> autoreduce(const std::vector<QPoly>& F, const MonomialIdeal& I);

struct QuasiStablePosition {
  bool success = false;
  std::size_t tries = 0;
  /// Entry bound in use at the last try.
  long bound = 0;
  std::optional<LowerTriangularChange> change;
  std::vector<MarkedPolynomial<Rational>> marked;
  /// (heads + B_I), quasi-stable on success.
  std::optional<MonomialIdeal> heads_ideal;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t max_tries = 200;
  long initial_bound = 3;
  /// The entry bound doubles after this many consecutive failures.
  std::size_t double_every = 10;
};

/// Identity first, then random changes with entries from {-B..B}. Try i uses
/// a generator seeded from (seed, i), so the outcome depends only on the
/// options. Failure after max_tries is inconclusive.
QuasiStablePosition quasi_stable_position(const std::vector<QPoly>& F, const MonomialIdeal& I,
                                          const SearchOptions& options = {});

}  // namespace relmark
