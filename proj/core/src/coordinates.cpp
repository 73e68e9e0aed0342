#include "relmark/coordinates.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "relmark/errors.hpp"

namespace relmark {

std::size_t lower_block(const MonomialIdeal& I) {
  std::size_t low = I.nvars();
  for (const auto& g : I.basis())
    if (auto m = g.min_variable()) low = std::min(low, *m);
  return low == 0 ? 0 : low - 1;
}

LowerTriangularChange::LowerTriangularChange(std::size_t nvars, Matrix g) : nvars_(nvars), g_(std::move(g)) {
  if (g_.empty() || g_.size() > nvars_) throw PreconditionError("change of coordinates has the wrong size");
  for (const auto& row : g_)
    if (row.size() != g_.size()) throw PreconditionError("change of coordinates must be square");
  if (rank(g_) != g_.size()) throw PreconditionError("change of coordinates is singular");
}

LowerTriangularChange LowerTriangularChange::identity(std::size_t nvars, std::size_t k) {
  Matrix g(k + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i <= k; ++i) g[i][i] = 1;
  return LowerTriangularChange(nvars, std::move(g));
}

bool LowerTriangularChange::is_identity() const {
  for (std::size_t i = 0; i < g_.size(); ++i)
    for (std::size_t j = 0; j < g_.size(); ++j)
      if (g_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

LowerTriangularChange LowerTriangularChange::inverse() const {
  const std::size_t m = g_.size();
  Matrix aug(m, std::vector<Rational>(2 * m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = g_[i][j];
    aug[i][m + i] = 1;
  }
  rref(aug);
  Matrix inv(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) inv[i][j] = aug[i][m + j];
  return LowerTriangularChange(nvars_, std::move(inv));
}

QPoly LowerTriangularChange::image(std::size_t j) const {
  if (j >= g_.size()) return QPoly::monomial(Term::variable(j));
  std::vector<QPoly::value_type> terms;
  for (std::size_t t = 0; t < g_.size(); ++t) terms.emplace_back(Term::variable(t), g_[j][t]);
  return QPoly::from_terms(std::move(terms));
}

namespace {

QPoly drop_ideal_terms(const QPoly& p, const MonomialIdeal& I) {
  std::vector<QPoly::value_type> kept;
  for (const auto& [t, c] : p)
    if (!I.contains(t)) kept.emplace_back(t, c);
  return QPoly::from_terms(std::move(kept));
}

class Substitution {
 public:
  explicit Substitution(const LowerTriangularChange& g) : g_(g) {}

  QPoly apply(const QPoly& p) {
    QPoly out;
    for (const auto& [t, c] : p) {
      QPoly img = QPoly::monomial(Term{}, c);
      Term upper;
      for (std::size_t j = 0; j < t.span(); ++j) {
        if (t[j] == 0) continue;
        if (j > g_.k()) upper *= Term::variable(j, t[j]);
        else img = img * power(j, t[j]);
      }
      out += img.mul_term(upper);
    }
    return out;
  }

 private:
  const QPoly& power(std::size_t j, Term::Exponent e) {
    auto& cache = powers_[j];
    if (cache.empty()) cache.push_back(QPoly::constant(1));
    while (cache.size() <= e) cache.push_back(cache.back() * g_.image(j));
    return cache[e];
  }

  const LowerTriangularChange& g_;
  std::unordered_map<std::size_t, std::vector<QPoly>> powers_;
};

}  // namespace

QPoly apply_change(const LowerTriangularChange& g, const QPoly& p, const MonomialIdeal& I) {
  Substitution s(g);
  return drop_ideal_terms(s.apply(p), I);
}

std::vector<QPoly> apply_change(const LowerTriangularChange& g, const std::vector<QPoly>& F, const MonomialIdeal& I) {
  Substitution s(g);
  std::vector<QPoly> out;
  out.reserve(F.size());
  for (const auto& f : F) out.push_back(drop_ideal_terms(s.apply(f), I));
  return out;
}

std::vector<MarkedPolynomial<Rational>> autoreduce(const std::vector<QPoly>& F, const MonomialIdeal& I) {
  std::vector<QPoly> rows;
  std::optional<unsigned> q;
  for (const auto& f : F) {
    const QPoly r = drop_ideal_terms(f, I);
    if (r.is_zero()) continue;
    const auto d = r.homogeneous_degree();
    if (!d || (q && *q != *d)) throw PreconditionError("autoreduction needs homogeneous input of one degree");
    q = d;
    rows.push_back(r);
  }
  if (rows.empty()) return {};
  // Columns: the support terms in descending degrevlex (the polynomial order).
  std::vector<Term> cols;
  for (const auto& r : rows)
    for (const auto& [t, c] : r) cols.push_back(t);
  std::sort(cols.begin(), cols.end(), TermGreater{TermOrder::DegRevLex});
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  Matrix m(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = rows[i].coefficient(cols[j]);
  const auto pivots = rref(m);
  std::vector<MarkedPolynomial<Rational>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<QPoly::value_type> tail;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != pivots[i] && m[i][j] != 0) tail.emplace_back(cols[j], m[i][j]);
    out.push_back({cols[pivots[i]], QPoly::from_terms(std::move(tail))});
  }
  return out;
}

namespace {

LowerTriangularChange random_change(std::size_t nvars, std::size_t k, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (;;) {
    Matrix g(k + 1, std::vector<Rational>(k + 1));
    for (auto& row : g)
      for (auto& x : row) x = entry(rng);
    if (rank(g) == k + 1) return LowerTriangularChange(nvars, std::move(g));
  }
}

}  // namespace

QuasiStablePosition quasi_stable_position(const std::vector<QPoly>& F, const MonomialIdeal& I,
                                          const SearchOptions& options) {
  const std::size_t k = lower_block(I);
  QuasiStablePosition out;
  long bound = options.initial_bound;
  for (std::size_t attempt = 0; attempt < options.max_tries; ++attempt) {
    if (attempt > 0 && options.double_every > 0 && attempt % options.double_every == 0) bound *= 2;
    out.tries = attempt + 1;
    out.bound = bound;
    std::optional<LowerTriangularChange> g;
    if (attempt == 0) {
      g = LowerTriangularChange::identity(I.nvars(), k);
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      g = random_change(I.nvars(), k, bound, rng);
    }
    auto marked = autoreduce(apply_change(*g, F, I), I);
    std::vector<Term> gens = I.basis();
    for (const auto& m : marked) gens.push_back(m.head);
    MonomialIdeal heads(I.nvars(), std::move(gens));
    if (!is_quasi_stable(heads)) continue;
    out.success = true;
    out.change = std::move(g);
    out.marked = std::move(marked);
    out.heads_ideal = std::move(heads);
    return out;
  }
  return out;
}

}  // namespace relmark
