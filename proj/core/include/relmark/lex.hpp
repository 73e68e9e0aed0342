#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relmark/hilbert.hpp"
#include "relmark/monomial_ideal.hpp"

namespace relmark {

/// The quotient S = R/I for a saturated quasi-stable monomial ideal I.
class QuotientContext {
 public:
  /// Throws NotQuasiStable or PreconditionError (not saturated).
  explicit QuotientContext(MonomialIdeal base);

  const MonomialIdeal& base() const { return base_; }
  std::size_t nvars() const { return base_.nvars(); }
  const PommaretBasis& pommaret() const { return pommaret_; }
  const HilbertData& hilbert() const { return hilbert_; }
  unsigned regularity() const { return pommaret_.regularity(); }

  bool is_free(const Term& t) const { return !base_.contains(t); }
  /// I-free terms of degree d, descending lex.
  std::vector<Term> free_terms(unsigned d) const { return normal_terms(base_, d); }

 private:
  MonomialIdeal base_;
  PommaretBasis pommaret_;
  HilbertData hilbert_;
};

/// The `count` lex-largest I-free terms of degree d. Throws PreconditionError
/// when fewer exist.
std::vector<Term> lex_segment(const QuotientContext& S, unsigned d, std::size_t count);

/// True iff the I-free terms of `terms` (all of degree d) are the first ones
/// of degree d in lex order.
bool is_lex_segment(const QuotientContext& S, const std::vector<Term>& terms, unsigned d);

/// Whether the image of U in S is a lex ideal: degreewise segment check up to
/// max(reg(U + I), reg(I)) + 1. An image that is not quasi-stable in S is
/// never a lex ideal.
bool is_lex_ideal(const QuotientContext& S, const MonomialIdeal& U);

/// A monomial ideal of S given by I-free minimal generators, together with
/// the ideal (generators + B_I) of R.
struct LexIdealInS {
  std::vector<Term> generators;
  MonomialIdeal lifted;
};

struct LexPointResult {
  std::optional<LexIdealInS> ideal;
  /// max(Gotzmann number, reg I).
  unsigned degree = 0;
  /// Why the construction failed, when it did.
  std::string reason;
};

/// The lex ideal of S with Hilbert polynomial p, built from the lex segment of
/// length p~(r) - p(r) in degree r and saturated. The output's Hilbert
/// polynomial is verified; no ideal is returned when the check fails.
LexPointResult lex_point(const QuotientContext& S, const UPoly& p);

enum class MacaulayLexFamily {
  ClementsLindstrom,
  AbedelfatahA,
  AbedelfatahB,
  MerminRegularSequence,
  ExtensionOfKnown,
  Unknown,
};

std::string to_string(MacaulayLexFamily f);

/// Syntactic recognizer for known Macaulay-Lex monomial ideals. Unknown is no
/// evidence against the property. Every implemented family tolerates absent
/// smallest variables (exponent infinity), so extensions from K[x_k..x_n]
/// are reported under their own family and ExtensionOfKnown is not produced.
MacaulayLexFamily macaulay_lex_recognizer(const MonomialIdeal& I);

/// Number of I-free terms in {x0..xn} * W.
std::size_t growth_count(const QuotientContext& S, const std::vector<Term>& W);

struct PiecewiseLexResult {
  bool piecewise = true;
  /// (a, b): a a minimal generator, b of the same degree, b >lex a,
  /// min(b) = min(a), b not in the ideal.
  std::optional<std::pair<Term, Term>> witness;
};

/// Piecewise lexsegment test over the minimal generators. Among violations the
/// witness has the lex-largest a, then the lex-largest b.
PiecewiseLexResult is_piecewise_lexsegment(const MonomialIdeal& I);

/// Every b of degree deg(a) with b >lex a, min(b) = min(a) and b outside I,
/// descending lex.
std::vector<Term> piecewise_violations(const MonomialIdeal& I, const Term& a);

}  // namespace relmark
