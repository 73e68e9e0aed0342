#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cli.hpp"
#include "relmark/coordinates.hpp"
#include "relmark/errors.hpp"
#include "relmark/groebner.hpp"
#include "relmark/hilbert.hpp"
#include "relmark/lex.hpp"
#include "relmark/marked.hpp"
#include "relmark/scheme.hpp"
#include "relmark/text.hpp"

namespace relmark::cli {

using nlohmann::json;

namespace {

/// Collects named comparisons; the example passes when all of them hold.
class Checks {
 public:
  void expect(const std::string& name, const json& expected, const json& actual) {
    const bool ok = expected == actual;
    passed_ = passed_ && ok;
    items_.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
  }
  void finish(json& doc) const {
    doc["checks"] = items_;
    doc["passed"] = passed_;
  }

 private:
  json items_ = json::array();
  bool passed_ = true;
};

std::string binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_str();
}

MonomialIdeal ideal_of(const std::string& text, const RingContext& ring) {
  return MonomialIdeal(ring.nvars(), parse_term_list(text, ring));
}

json terms_json(const std::vector<Term>& ts, const RingContext& ring) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(format_term(t, ring));
  return a;
}

json sorted_strings(const std::vector<ParamPoly>& ps, const RingContext& names) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(format(p, names));
  return json(std::vector<std::string>(s.begin(), s.end()));
}

json analysis_json(const SchemeAnalysis& a) {
  json j = {{"parameters", a.parameters},
            {"krull_dimension", a.krull_dimension},
            {"tangent_dimension_at_origin", a.tangent_dimension_at_origin},
            {"coordinate_subspace", a.coordinate.is_coordinate},
            {"free_parameters", a.coordinate.free_parameters.size()}};
  if (a.multiplicity) j["multiplicity"] = *a.multiplicity;
  return j;
}

std::vector<QPoly> monomials(const MonomialIdeal& I) {
  std::vector<QPoly> out;
  for (const auto& g : I.basis()) out.push_back(QPoly::monomial(g));
  return out;
}

json header(const std::string& name) { return json{{"schema", 1}, {"command", "example"}, {"example", name}}; }

json reduction_loop(const ExampleOptions&) {
  const auto ring = RingContext::x_ring(4);
  const auto I = ideal_of("x3^2, x2^3", ring), J = ideal_of("x3^2, x3*x2, x2^3", ring);
  auto mark = [&](const MonomialIdeal& K, const std::string& list) {
    std::vector<MarkedPolynomial<Rational>> out;
    for (const auto& p : parse_polynomial_list(list, ring)) out.push_back(mark_on(K, p));
    return out;
  };
  const auto F = MarkedSet<Rational>::over(I, mark(I, "x3^2, x3*x2^3, x2^3 - 3*x3*x2^2"));
  const auto H = MarkedSet<Rational>::relative(I, J, mark(J, "x3*x2 - 4*x2^2"));
  const QPoly x3h = parse_polynomial("x3*(x3*x2 - 4*x2^2)", ring);
  json doc = header("reduction-loop");
  Checks c;
  c.expect("reduce by H* of x3*h", "x3^2*x2 - 16*x2^3", format(reduce(H, x3h), ring));
  c.expect("reduce by F* of x3*h", "-4*x3*x2^2", format(reduce(F, x3h), ring));
  const auto fh = interleaved_reduce(F, H, parse_polynomial("x2^3", ring), InterleaveOrder::FThenH, 10);
  c.expect("F then H on x2^3 loops", true, fh.kind == InterleavedResult::Kind::LoopDetected);
  c.expect("F then H loop value", "12*x2^3", format(fh.value, ring));
  const auto hf = interleaved_reduce(F, H, parse_polynomial("x2^2*x3", ring), InterleaveOrder::HThenF, 10);
  c.expect("H then F on x3*x2^2 loops", true, hf.kind == InterleavedResult::Kind::LoopDetected);
  c.expect("H then F loop value", "12*x3*x2^2", format(hf.value, ring));
  c.expect("H is a relative marked basis", true, is_relative_marked_basis(I, J, H));
  c.finish(doc);
  return doc;
}

json curve_in_quotient(const ExampleOptions&) {
  const auto ring = RingContext::x_ring(4);
  const auto I = ideal_of("x3^2, x2^5", ring), J = ideal_of("x3^2, x3*x2, x3*x1^2, x2^5", ring);
  const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, 2);
  const auto names = R.parameters.names();
  json doc = header("curve-in-quotient");
  Checks c;
  c.expect("pommaret basis of I", json({"x3^2", "x3*x2^5", "x2^5"}), terms_json(pommaret_basis(I).terms(), ring));
  c.expect("parameters", 20, R.parameters.size());
  c.expect("heads", json({"x3*x2", "x3*x1^2"}), terms_json(R.parameters.heads(), ring));
  const std::map<std::string, std::string> printed = {
      {"x3*x2", "c1*x0^2 + c2*x0*x1 + c3*x1^2 + c4*x0*x2 + c5*x1*x2 + c6*x2^2 + c7*x0*x3 + c8*x1*x3 + x2*x3"},
      {"x3*x1^2",
       "c9*x0^3 + c10*x0^2*x1 + c11*x0*x1^2 + c12*x1^3 + c13*x0^2*x2 + c14*x0*x1*x2 + c15*x1^2*x2 + c16*x0*x2^2"
       " + c17*x1*x2^2 + c18*x2^3 + c19*x0^2*x3 + c20*x0*x1*x3 + x1^2*x3"}};
  json generic = json::array();
  for (const auto& [head, text] : printed) {
    const auto* h = R.generic.find(parse_term(head, ring));
    if (!h) throw PreconditionError("missing head " + head);
    // Printed with plus signs: head + sum c_k * tail_k.
    const ParamCoeffPoly plus = ParamCoeffPoly::monomial(h->head) - h->tail;
    generic.push_back(format(plus, ring, names));
    c.expect("generic polynomial on " + head, true, plus == parse_param_polynomial(text, ring, names));
    c.expect("terms of the generic polynomial on " + head, head == "x3*x2" ? 9 : 13, plus.size());
  }
  doc["generic_set"] = generic;
  const auto a = analyze(R.polynomials(), R.parameters.size());
  doc["analysis"] = analysis_json(a);
  c.expect("tangent dimension", 7, a.tangent_dimension_at_origin);
  c.expect("krull dimension", 2, a.krull_dimension);
  c.expect("parameters of the full route", 50, full_scheme_with_containment(J, 2, monomials(I)).parameters.size());
  const auto lp = lex_point(QuotientContext(I), UPoly::parse("5*z - 3"));
  c.expect("lex point of 5*z - 3", terms_json(J.basis(), ring),
           lp.ideal ? terms_json(lp.ideal->lifted.basis(), ring) : json(nullptr));
  c.finish(doc);
  return doc;
}

json fat_point(const ExampleOptions& o) {
  const unsigned n = o.n, p = o.p;
  if (n < 2 || p < 2) throw PreconditionError("fat-point needs --n >= 2 and --p >= 2");
  const std::size_t nv = n + 1;
  const auto ring = RingContext::x_ring(nv);
  const MonomialIdeal I(nv, {Term::variable(n, 2), Term::variable(n - 1, p)});
  const MonomialIdeal J(nv, {Term::variable(n), Term::variable(n - 1, p)});
  const SchemeIdeal R = relative_scheme_ideal_truncated(I, J, 0);
  const auto names = R.parameters.names();
  json doc = header("fat-point");
  doc["n"] = n;
  doc["p"] = p;
  doc["I"] = terms_json(I.basis(), ring);
  doc["J"] = terms_json(J.basis(), ring);
  Checks c;
  c.expect("parameters", n, R.parameters.size());
  std::vector<ParamPoly> square;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) square.push_back(ParamPoly::monomial(Term::variable(i) * Term::variable(j)));
  doc["generators"] = sorted_strings(R.polynomials(), names);
  c.expect("ideal is the square of (c1..cn)", sorted_strings(square, names), doc["generators"]);
  const auto a = analyze(R.polynomials(), R.parameters.size());
  doc["analysis"] = analysis_json(a);
  c.expect("tangent dimension", n, a.tangent_dimension_at_origin);
  c.expect("multiplicity", n + 1, a.multiplicity ? json(*a.multiplicity) : json(nullptr));
  const auto full = full_scheme_with_containment(J, 0, monomials(I));
  Integer expected(binomial(n - 1 + p, p));
  expected += n - 1;
  c.expect("parameters of the full route", expected.get_str(), std::to_string(full.parameters.size()));
  c.finish(doc);
  return doc;
}

json quotient_marking(const ExampleOptions&) {
  const auto ring = RingContext::x_ring(3);
  const auto I = ideal_of("x2^7", ring);
  json doc = header("quotient-marking");
  Checks c;
  c.expect("variables moved", 1, lower_block(I));
  const LowerTriangularChange swap(3, {{0, 1}, {1, 0}});
  const auto moved = apply_change(swap, parse_polynomial("x0*x1 + x1^2", ring), I);
  c.expect("swap x0 and x1", "x1*x0 + x0^2", format(moved, ring));
  const auto marked = autoreduce({parse_polynomial("x0*x1 + x1^2", ring)}, I);
  c.expect("head of x0*x1 + x1^2", "x1^2", marked.empty() ? json(nullptr) : json(format_term(marked[0].head, ring)));
  auto r = quasi_stable_position({parse_polynomial("x1*x2^6", ring)}, I);
  c.expect("x1*x2^6 is already in position", true, r.success && r.tries == 1 && r.change->is_identity());
  c.expect("heads of x1*x2^6", json({"x2^7", "x2^6*x1"}),
           r.heads_ideal ? terms_json(r.heads_ideal->basis(), ring) : json(nullptr));
  SearchOptions opt;
  opt.seed = 9;
  r = quasi_stable_position({parse_polynomial("x0*x2^6", ring)}, I, opt);
  doc["x0*x2^6"] = {{"tries", r.tries}, {"success", r.success}};
  c.expect("x0*x2^6 needs a change", true, r.success && !r.change->is_identity());
  c.expect("head after the change", "x2^6*x1",
           r.success ? json(format_term(r.marked.at(0).head, ring)) : json(nullptr));
  // From the regularity on, the heads of a Pommaret-marked set over the
  // truncation and of the module marking agree.
  const auto J = ideal_of("x1^7, x2^7", ring);
  const QPoly f = parse_polynomial("x0*x1^6 + x1^7", ring);
  const unsigned q = regularity(J);
  std::vector<QPoly> F;
  for (const auto& m : terms_of_degree(3, q - 7)) F.push_back(f.mul_term(m));
  std::vector<MarkedPolynomial<Rational>> H = autoreduce(F, I);
  const auto Iq = truncation(I, q), Jq = truncation(J, q);
  c.expect("marked over the truncation in degree " + std::to_string(q), true,
           is_relative_marked_basis(Iq, Jq, MarkedSet<Rational>::relative(Iq, Jq, H)));
  c.finish(doc);
  return doc;
}

json lex_obstructions(const ExampleOptions&) {
  json doc = header("lex-obstructions");
  Checks c;
  {
    const auto ring = RingContext::x_ring(4);
    const auto I = ideal_of("x3^2, x3*x2^7, x3*x2*x1^7, x3*x2*x1^2*x0^7", ring);
    c.expect("family of I", "abedelfatah-b", to_string(macaulay_lex_recognizer(I)));
    const auto sat = saturation(I);
    c.expect("saturation", json({"x3^2", "x3*x2^7", "x3*x2*x1^2"}), terms_json(sat.basis(), ring));
    const QuotientContext S(sat);
    const auto W = parse_term_list("x3*x1^3", ring);
    const auto L = lex_segment(S, 4, 1);
    c.expect("lex segment of size one in degree 4", json({"x3*x2^3"}), terms_json(L, ring));
    c.expect("growth of x3*x1^3", 2, growth_count(S, W));
    c.expect("growth of x3*x2^3", 3, growth_count(S, L));
  }
  {
    // Extra smallest variable w.
    const auto ring = RingContext::x_ring(5, true);
    const auto I = ideal_of("x3^2, x3*x2^3, x3*x2*x1^3, x3*x2*x1^2*x0^3", ring);
    c.expect("saturated with w", true, is_saturated(I));
    c.expect("regularity with w", 8, regularity(I));
    const auto I8 = truncation(I, 8);
    const auto pw = is_piecewise_lexsegment(I8);
    c.expect("truncation at 8 is piecewise lexsegment", false, pw.piecewise);
    const json witness = pw.witness ? json({format_term(pw.witness->first, ring), format_term(pw.witness->second, ring)})
                                    : json(nullptr);
    c.expect("witness pair", json({"x3*x2*x1^2*x0^4", "x3*x2^2*x1*x0^3"}), witness);
    const Term a = parse_term("x3*x2*x1^2*x0^4", ring);
    doc["violations_of_a"] = terms_json(piecewise_violations(I8, a), ring);
  }
  c.finish(doc);
  return doc;
}

json lex_point_family(const std::string& name, const MonomialIdeal& I, const MonomialIdeal& J, unsigned t,
                      std::size_t expected_params, std::optional<std::size_t> free, std::optional<int> dim,
                      std::optional<std::size_t> tangent) {
  const auto ring = RingContext::x_ring(I.nvars());
  json doc = header(name);
  doc["I"] = terms_json(I.basis(), ring);
  doc["J"] = terms_json(J.basis(), ring);
  doc["t"] = t;
  Checks c;
  const auto lp = lex_point(QuotientContext(I), hilbert_polynomial(J));
  c.expect("J is the lex point of R/I", terms_json(J.basis(), ring),
           lp.ideal ? terms_json(lp.ideal->lifted.basis(), ring) : json(nullptr));
  const auto R = relative_scheme_ideal_truncated(I, J, t);
  const auto a = analyze(R.polynomials(), R.parameters.size());
  doc["analysis"] = analysis_json(a);
  c.expect("parameters", expected_params, R.parameters.size());
  if (free) {
    c.expect("linear", true, a.coordinate.is_coordinate);
    c.expect("free parameters", *free, a.coordinate.free_parameters.size());
  }
  if (dim) c.expect("krull dimension", *dim, a.krull_dimension);
  if (tangent) c.expect("tangent dimension", *tangent, a.tangent_dimension_at_origin);
  c.finish(doc);
  return doc;
}

json smooth_a(const ExampleOptions& o) {
  const unsigned n = o.n, k = o.k;
  if (n < 3 || k < 2) throw PreconditionError("smooth-lexpoint-a needs --n >= 3 and --k >= 2");
  const std::size_t nv = n + 1;
  const Term top = Term::variable(n, k - 1);
  const MonomialIdeal I(nv, {Term::variable(n, k), top * Term::variable(n - 1)});
  const MonomialIdeal J(nv, {Term::variable(n, k), top * Term::variable(n - 1), top * Term::variable(n - 2)});
  const std::size_t params = std::stoul(binomial(n + k, n)) - 3;
  auto doc = lex_point_family("smooth-lexpoint-a", I, J, rho(J) - 1, params, n - 2, static_cast<int>(n - 2), n - 2);
  doc["n"] = n;
  doc["k"] = k;
  return doc;
}

json smooth_b(const ExampleOptions& o) {
  const unsigned n = o.n;
  if (n < 3) throw PreconditionError("smooth-lexpoint-b needs --n >= 3");
  const std::size_t nv = n + 1;
  const Term xn = Term::variable(n), xm = Term::variable(n - 1), xl = Term::variable(n - 2);
  const MonomialIdeal I(nv, {xn * xn, xn * xm, xm * xm});
  const MonomialIdeal J(nv, {xn * xn, xn * xm, xn * xl, xm * xm});
  const auto R = relative_scheme_ideal_truncated(I, J, rho(J) - 1);
  auto doc = lex_point_family("smooth-lexpoint-b", I, J, rho(J) - 1, R.parameters.size(), 2 * n - 3,
                              static_cast<int>(2 * n - 3), 2 * n - 3);
  doc["n"] = n;
  return doc;
}

json singular(const ExampleOptions&) {
  const auto ring = RingContext::x_ring(4);
  const auto I = ideal_of("x3^3, x3^2*x2", ring), J = ideal_of("x3^2, x3*x2, x3*x1", ring);
  const auto R = relative_scheme_ideal_truncated(I, J, 1);
  return lex_point_family("singular-lexpoint", I, J, 1, R.parameters.size(), std::nullopt, 2, 6);
}

json double_plane(const ExampleOptions&) {
  const auto ring = RingContext::x_ring(4);
  const auto I = ideal_of("x3^2", ring), J = ideal_of("x3^2, x2^2", ring);
  const auto R = relative_scheme_ideal_truncated(I, J, 1);
  const auto a = analyze(R.polynomials(), R.parameters.size());
  json doc = header("double-plane");
  doc["analysis"] = analysis_json(a);
  Checks c;
  c.expect("hilbert polynomial of R/J", "4*z", hilbert_polynomial(J).to_string());
  c.expect("krull dimension", 8, a.krull_dimension);
  c.expect("tangent dimension", 8, a.tangent_dimension_at_origin);
  c.expect("J is not the lex point of R/I", false, [&] {
    const auto lp = lex_point(QuotientContext(I), hilbert_polynomial(J));
    return lp.ideal && lp.ideal->lifted == J;
  }());
  c.finish(doc);
  return doc;
}

using Runner = std::function<json(const ExampleOptions&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"reduction-loop", reduction_loop},   {"curve-in-quotient", curve_in_quotient},
      {"fat-point", fat_point},             {"quotient-marking", quotient_marking},
      {"lex-obstructions", lex_obstructions}, {"smooth-lexpoint-a", smooth_a},
      {"smooth-lexpoint-b", smooth_b},      {"singular-lexpoint", singular},
      {"double-plane", double_plane},
  };
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

json run_example(const std::string& name, const ExampleOptions& options) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw PreconditionError("unknown example '" + name + "'");
}

}  // namespace relmark::cli
