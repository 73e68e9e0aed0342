#include "relmark/groebner.hpp"

#include <algorithm>
#include <functional>

#include "relmark/errors.hpp"
#include "relmark/linalg.hpp"

namespace relmark {

namespace {

using Entry = std::pair<Term, Rational>;

/// Terms sorted descending under a fixed order.
class OrderedPoly {
 public:
  OrderedPoly() = default;
  OrderedPoly(const ParamPoly& p, TermOrder order) : terms_(p.terms()) {
    if (order != TermOrder::DegRevLex)
      std::sort(terms_.begin(), terms_.end(),
                [order](const Entry& a, const Entry& b) { return compare(order, a.first, b.first) > 0; });
  }

  bool is_zero() const { return terms_.empty(); }
  const Entry& leading() const { return terms_.front(); }
  const std::vector<Entry>& terms() const { return terms_; }
  std::vector<Entry>& terms() { return terms_; }

  void make_monic() {
    if (terms_.empty()) return;
    const Rational inv = 1 / terms_.front().second;
    for (auto& [t, c] : terms_) c *= inv;
  }

  /// this - lambda * shift * f, where the leading terms are known to cancel
  /// and are dropped.
  void subtract(const OrderedPoly& f, const Rational& lambda, const Term& shift, TermOrder order,
                std::size_t bit_cap) {
    std::vector<Entry> r;
    r.reserve(terms_.size() + f.terms_.size());
    auto a = terms_.begin() + 1;
    auto b = f.terms_.begin() + 1;
    auto emit = [&](Term t, Rational c) {
      if (sgn(c) == 0) return;
      if (mpz_sizeinbase(c.get_num_mpz_t(), 2) > bit_cap || mpz_sizeinbase(c.get_den_mpz_t(), 2) > bit_cap)
        throw BudgetExceeded("Groebner coefficient size exceeded its cap");
      r.emplace_back(std::move(t), std::move(c));
    };
    while (a != terms_.end() || b != f.terms_.end()) {
      if (b == f.terms_.end()) {
        r.push_back(std::move(*a++));
        continue;
      }
      Term bt = b->first * shift;
      if (a == terms_.end()) {
        emit(std::move(bt), -(lambda * b->second));
        ++b;
        continue;
      }
      const auto cmp = compare(order, a->first, bt);
      if (cmp > 0) {
        r.push_back(std::move(*a++));
      } else if (cmp < 0) {
        emit(std::move(bt), -(lambda * b->second));
        ++b;
      } else {
        emit(std::move(bt), a->second - lambda * b->second);
        ++a;
        ++b;
      }
    }
    terms_ = std::move(r);
  }

  ParamPoly to_poly() const { return ParamPoly::from_terms(terms_); }

 private:
  std::vector<Entry> terms_;
};

struct Element {
  OrderedPoly poly;
  Term lead;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Term lcm;
};

bool coprime(const Term& a, const Term& b) { return a.gcd(b).is_one(); }

class Engine {
 public:
  Engine(TermOrder order, const GroebnerBudget& budget, GroebnerStats* stats)
      : order_(order), budget_(budget), stats_(stats) {}

  /// Full normal form by the active elements.
  OrderedPoly normal_form(OrderedPoly p) const {
    OrderedPoly done;
    while (!p.is_zero()) {
      const auto& [t, c] = p.leading();
      const Element* g = divisor(t);
      if (!g) {
        done.terms().push_back(p.leading());
        p.terms().erase(p.terms().begin());
        continue;
      }
      p.subtract(g->poly, c, t / g->lead, order_, budget_.max_coefficient_bits);
    }
    return done;
  }

  /// Takes p as a reducer without forming pairs (p must be monic).
  void adopt(OrderedPoly p) {
    const Term lead = p.leading().first;
    elems_.push_back({std::move(p), lead, true});
  }

  void add_input(OrderedPoly p) {
    p = normal_form(std::move(p));
    if (p.is_zero()) return;
    p.make_monic();
    insert(std::move(p));
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return compare(order_, a.lcm, b.lcm) < 0;
      });
      const Pair pr = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      if (stats_) ++stats_->pairs_reduced;
      if (++processed_ > budget_.max_pairs) throw BudgetExceeded("Groebner pair budget exhausted");
      OrderedPoly s = spoly(pr);
      s = normal_form(std::move(s));
      if (s.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      s.make_monic();
      insert(std::move(s));
    }
  }

  /// Interreduced, monic, sorted ascending by leading term.
  std::vector<ParamPoly> reduced_basis() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].active) live.push_back(k);
    std::vector<ParamPoly> out;
    for (std::size_t k : live) {
      elems_[k].active = false;
      OrderedPoly tail = elems_[k].poly;
      tail.terms().erase(tail.terms().begin());
      OrderedPoly nf = normal_form(std::move(tail));
      elems_[k].active = true;
      nf.terms().insert(nf.terms().begin(), elems_[k].poly.leading());
      out.push_back(nf.to_poly());
    }
    std::sort(out.begin(), out.end(), [&](const ParamPoly& a, const ParamPoly& b) {
      return compare(order_, leading_term(a, order_), leading_term(b, order_)) < 0;
    });
    return out;
  }

 private:
  const Element* divisor(const Term& t) const {
    for (const auto& e : elems_)
      if (e.active && e.lead.divides(t)) return &e;
    return nullptr;
  }

  OrderedPoly spoly(const Pair& p) const {
    const Element& a = elems_[p.i];
    const Element& b = elems_[p.j];
    OrderedPoly s;
    // lcm/lt(a) * a - lcm/lt(b) * b, both monic.
    const Term sa = p.lcm / a.lead;
    for (const auto& [t, c] : a.poly.terms()) s.terms().emplace_back(t * sa, c);
    // The leading terms cancel and are skipped by subtract().
    s.subtract(b.poly, Rational(1), p.lcm / b.lead, order_, budget_.max_coefficient_bits);
    return s;
  }

  /// Gebauer-Moeller update with the new element h.
  void insert(OrderedPoly h) {
    const std::size_t hi = elems_.size();
    const Term lh = h.leading().first;
    elems_.push_back({std::move(h), lh, true});

    std::vector<Pair> C, D;
    for (std::size_t k = 0; k < hi; ++k)
      if (elems_[k].active) C.push_back({hi, k, lh.lcm(elems_[k].lead)});
    if (stats_) stats_->pairs_considered += C.size();
    while (!C.empty()) {
      const Pair p = C.back();
      C.pop_back();
      const bool disjoint = coprime(lh, elems_[p.j].lead);
      auto divides_it = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      if (disjoint || (std::none_of(C.begin(), C.end(), divides_it) && std::none_of(D.begin(), D.end(), divides_it)))
        D.push_back(p);
    }
    std::vector<Pair> E;
    for (auto& p : D)
      if (!coprime(lh, elems_[p.j].lead)) E.push_back(std::move(p));

    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && elems_[p.i].lead.lcm(lh) != p.lcm && lh.lcm(elems_[p.j].lead) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : E) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    for (std::size_t k = 0; k < hi; ++k)
      if (elems_[k].active && lh.divides(elems_[k].lead)) elems_[k].active = false;
  }

  TermOrder order_;
  GroebnerBudget budget_;
  GroebnerStats* stats_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace

Term leading_term(const ParamPoly& p, TermOrder order) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no leading term");
  if (order == TermOrder::DegRevLex) return p.leading().first;
  const Term* best = &p.leading().first;
  for (const auto& [t, c] : p)
    if (compare(order, t, *best) > 0) best = &t;
  return *best;
}

GroebnerBasis::GroebnerBasis(std::size_t nvars, TermOrder order, std::vector<ParamPoly> gens)
    : nvars_(nvars), order_(order), gens_(std::move(gens)) {}

bool GroebnerBasis::is_unit() const { return gens_.size() == 1 && gens_.front() == ParamPoly::constant(Rational(1)); }

std::vector<Term> GroebnerBasis::leading_terms() const {
  std::vector<Term> out;
  for (const auto& g : gens_) out.push_back(leading_term(g, order_));
  return out;
}

ParamPoly GroebnerBasis::normal_form(const ParamPoly& p) const {
  Engine e(order_, GroebnerBudget{std::size_t(-1), std::size_t(-1)}, nullptr);
  for (const auto& g : gens_) e.adopt(OrderedPoly(g, order_));
  return e.normal_form(OrderedPoly(p, order_)).to_poly();
}

GroebnerBasis buchberger(const std::vector<ParamPoly>& gens, std::size_t nvars, TermOrder order,
                         const GroebnerBudget& budget, GroebnerStats* stats) {
  for (const auto& g : gens)
    if (g.span() > nvars) throw PreconditionError("generator uses a parameter outside the ring");
  Engine e(order, budget, stats);
  // Small generators first keeps the early reductions cheap.
  std::vector<ParamPoly> sorted = gens;
  std::stable_sort(sorted.begin(), sorted.end(), [](const ParamPoly& a, const ParamPoly& b) {
    const unsigned da = a.is_zero() ? 0 : a.leading().first.degree();
    const unsigned db = b.is_zero() ? 0 : b.leading().first.degree();
    return da != db ? da < db : a.size() < b.size();
  });
  for (const auto& g : sorted) {
    e.add_input(OrderedPoly(g, order));
    e.run();
  }
  return GroebnerBasis(nvars, order, e.reduced_basis());
}

namespace {

/// Smallest set of variables meeting every support (branch and bound).
class HittingSet {
 public:
  explicit HittingSet(std::vector<std::vector<std::size_t>> sets) : sets_(std::move(sets)) {}

  std::size_t minimum(std::size_t nvars) {
    best_ = nvars + 1;
    std::vector<char> chosen(nvars, 0);
    search(chosen, 0);
    return best_;
  }

 private:
  void search(std::vector<char>& chosen, std::size_t size) {
    if (size >= best_) return;
    const std::vector<std::size_t>* pick = nullptr;
    for (const auto& s : sets_) {
      if (std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; })) continue;
      if (!pick || s.size() < pick->size()) pick = &s;
      if (pick->size() == 1) break;
    }
    if (!pick) {
      best_ = size;
      return;
    }
    for (auto v : *pick) {
      chosen[v] = 1;
      search(chosen, size + 1);
      chosen[v] = 0;
    }
  }

  std::vector<std::vector<std::size_t>> sets_;
  std::size_t best_ = 0;
};

}  // namespace

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& t : gb.leading_terms()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < t.span(); ++i)
      if (t[i] > 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  // Keep inclusion-minimal supports only.
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<std::size_t>> minimal;
  for (auto& s : supports) {
    const bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!covered) minimal.push_back(std::move(s));
  }
  const std::size_t cover = HittingSet(std::move(minimal)).minimum(gb.nvars());
  return static_cast<int>(gb.nvars() - cover);
}

int krull_dimension(const std::vector<ParamPoly>& gens, std::size_t nvars, const GroebnerBudget& budget) {
  return krull_dimension(buchberger(gens, nvars, TermOrder::DegRevLex, budget));
}

std::size_t tangent_dimension_at_origin(const std::vector<ParamPoly>& gens, std::size_t nvars) {
  Matrix m;
  for (const auto& g : gens) {
    if (g.span() > nvars) throw PreconditionError("generator uses a parameter outside the ring");
    std::vector<Rational> row(nvars);
    bool any = false;
    for (const auto& [t, c] : g) {
      if (t.is_one()) throw PreconditionError("a generator has a nonzero constant term; the origin is not a point");
      if (t.degree() == 1) {
        row[*t.min_variable()] = c;
        any = true;
      }
    }
    if (any) m.push_back(std::move(row));
  }
  return nvars - rank(std::move(m));
}

std::size_t multiplicity_zero_dim(const GroebnerBasis& gb) {
  if (gb.is_unit()) throw PreconditionError("the unit ideal defines the empty scheme");
  if (krull_dimension(gb) != 0) throw PreconditionError("multiplicity needs a zero-dimensional ideal");
  const auto leads = gb.leading_terms();
  constexpr std::size_t kCap = 50'000'000;
  std::size_t count = 0;
  // Depth-first over exponent vectors, variable by variable.
  std::vector<Term::Exponent> e(gb.nvars(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == gb.nvars()) {
      if (++count > kCap) throw BudgetExceeded("too many standard monomials");
      return;
    }
    for (e[var] = 0;; ++e[var]) {
      const Term t(e);
      // Any later variable set to zero gives the smallest completion.
      if (std::any_of(leads.begin(), leads.end(), [&](const Term& l) { return l.divides(t); })) break;
      walk(var + 1);
    }
    e[var] = 0;
  };
  walk(0);
  return count;
}

namespace {

CoordinateSubspace coordinate_subspace(const GroebnerBasis& gb) {
  CoordinateSubspace out;
  std::vector<char> used(gb.nvars(), 0);
  for (const auto& g : gb.generators()) {
    if (g.size() != 1 || g.leading().first.degree() != 1) return out;
    used[*g.leading().first.min_variable()] = 1;
  }
  out.is_coordinate = true;
  for (std::size_t i = 0; i < gb.nvars(); ++i)
    if (!used[i]) out.free_parameters.push_back(i);
  return out;
}

}  // namespace

CoordinateSubspace detect_coordinate_subspace(const std::vector<ParamPoly>& gens, std::size_t nvars,
                                              const GroebnerBudget& budget) {
  return coordinate_subspace(buchberger(gens, nvars, TermOrder::DegRevLex, budget));
}

SchemeAnalysis analyze(const std::vector<ParamPoly>& gens, std::size_t nvars, const GroebnerBudget& budget) {
  SchemeAnalysis a;
  a.parameters = nvars;
  a.tangent_dimension_at_origin = tangent_dimension_at_origin(gens, nvars);
  const GroebnerBasis gb = buchberger(gens, nvars, TermOrder::DegRevLex, budget);
  a.groebner_size = gb.size();
  a.krull_dimension = krull_dimension(gb);
  if (a.krull_dimension == 0) a.multiplicity = multiplicity_zero_dim(gb);
  a.coordinate = coordinate_subspace(gb);
  return a;
}

}  // namespace relmark
