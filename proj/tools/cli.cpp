#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

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

/// Raw command-line inputs shared by the subcommands.
struct Inputs {
  std::string I, J, F, p, Z, W, hp, polys;
  std::optional<unsigned> t;
  std::optional<std::size_t> ring;
  std::optional<std::size_t> params;
  bool with_w = false;
  std::optional<std::string> order;
  std::string route = "relative";
  std::uint64_t seed = 0;
  std::size_t max_tries = 200;
  std::size_t budget_pairs = GroebnerBudget{}.max_pairs;
  std::string example;
  ExampleOptions example_options;
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// Resolves the ring from --ring or the largest variable index in the inputs.
class Session {
 public:
  Session(Inputs& in, std::istream& input) {
    // "-" reads the value from stdin; only one option may do so.
    for (std::string* s : {&in.I, &in.J, &in.F, &in.p, &in.Z, &in.W, &in.polys})
      if (*s == "-") *s = slurp(input);
    std::size_t need = 1;
    for (const std::string* s : {&in.I, &in.J, &in.F, &in.p, &in.Z, &in.W})
      if (auto k = max_x_index(*s)) need = std::max(need, *k + 1 + (in.with_w ? 1 : 0));
    nvars_ = in.ring.value_or(need);
    if (nvars_ < need)
      throw ParseError("--ring " + std::to_string(nvars_) + " is too small for the inputs (" + std::to_string(need) +
                       " variables used)");
    ring_ = RingContext::x_ring(nvars_, in.with_w);
  }

  std::size_t nvars() const { return nvars_; }
  const RingContext& ring() const { return ring_; }

  MonomialIdeal ideal(const std::string& text, const char* flag) const {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
      throw ParseError(std::string("missing ") + flag);
    return MonomialIdeal(nvars_, parse_term_list(text, ring_));
  }
  std::vector<QPoly> polys(const std::string& text) const { return parse_polynomial_list(text, ring_); }
  std::vector<Term> terms(const std::string& text) const { return parse_term_list(text, ring_); }

  json show(const std::vector<Term>& ts) const {
    json a = json::array();
    for (const auto& t : ts) a.push_back(format_term(t, ring_));
    return a;
  }
  json show(const MonomialIdeal& I) const { return show(I.basis()); }
  std::string show(const QPoly& p) const { return format(p, ring_); }
  json show(const std::vector<QPoly>& ps) const {
    json a = json::array();
    for (const auto& p : ps) a.push_back(show(p));
    return a;
  }

 private:
  std::size_t nvars_ = 0;
  RingContext ring_ = RingContext::x_ring(1);
};

json header(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

json cmd_pommaret(const Session& s, const Inputs& in) {
  const auto I = s.ideal(in.I, "--I");
  json doc = header("pommaret");
  doc["ring"] = s.nvars();
  doc["ideal"] = s.show(I);
  doc["quasi_stable"] = is_quasi_stable(I);
  const auto P = pommaret_basis(I);
  doc["pommaret_basis"] = s.show(P.terms());
  doc["regularity"] = P.regularity();
  doc["rho"] = rho(P);
  doc["saturated"] = is_saturated(I);
  doc["saturation"] = s.show(saturation(I));
  doc["cohen_macaulay"] = is_cohen_macaulay(I);
  doc["hilbert_polynomial"] = hilbert_polynomial(I).to_string();
  return doc;
}

json cmd_reduce(const Session& s, const Inputs& in) {
  const auto J = s.ideal(in.J, "--J");
  std::vector<MarkedPolynomial<Rational>> marked;
  for (const auto& f : s.polys(in.F)) marked.push_back(mark_on(J, f));
  MarkedSet<Rational> E = in.I.empty() ? MarkedSet<Rational>::over(J, std::move(marked))
                                       : MarkedSet<Rational>::relative(s.ideal(in.I, "--I"), J, std::move(marked));
  json doc = header("reduce");
  json heads = json::array();
  for (const auto& f : E.polynomials()) heads.push_back(format_term(f.head, s.ring()));
  doc["heads"] = heads;
  json forms = json::array();
  const auto inputs = s.polys(in.p);
  if (inputs.empty()) forms.push_back("0");
  for (const auto& p : inputs) {
    std::size_t steps = 0;
    const QPoly r = reduce(E, p, &steps);
    forms.push_back({{"input", s.show(p)}, {"normal_form", s.show(r)}, {"steps", steps}});
  }
  doc["normal_forms"] = forms;
  return doc;
}

SchemeIdeal build_scheme(const Session& s, const Inputs& in) {
  const auto J = s.ideal(in.J, "--J");
  if (in.route == "full") {
    const unsigned t = in.t.value_or(rho(J) > 0 ? rho(J) - 1 : 0);
    std::vector<QPoly> Z = s.polys(in.Z);
    if (Z.empty() && !in.I.empty())
      for (const auto& g : s.ideal(in.I, "--I").basis()) Z.push_back(QPoly::monomial(g));
    return full_scheme_with_containment(J, t, Z);
  }
  if (in.route != "relative") throw ParseError("--route must be relative or full");
  const auto I = s.ideal(in.I, "--I");
  return in.t ? relative_scheme_ideal_truncated(I, J, *in.t) : relative_scheme_ideal(I, J);
}

json describe_scheme(const Session& s, const SchemeIdeal& R, bool with_generators) {
  json doc;
  doc["parameters"] = R.parameters.size();
  doc["heads"] = s.show(R.parameters.heads());
  const RingContext names = R.parameters.names();
  json generic = json::array();
  for (const auto& h : R.generic.polynomials())
    generic.push_back(format(h.polynomial(), s.ring(), names));
  doc["generic_set"] = generic;
  doc["generator_count"] = R.generators.size();
  if (with_generators) {
    json gens = json::array();
    for (const auto& g : R.generators)
      gens.push_back({{"polynomial", format(g.polynomial, names)}, {"from", to_string(g.from.kind)},
                      {"term", format_term(g.from.x_term, s.ring())}});
    doc["generators"] = gens;
  }
  return doc;
}

json cmd_relscheme(const Session& s, const Inputs& in) {
  json doc = header("relscheme");
  doc["route"] = in.route;
  doc.update(describe_scheme(s, build_scheme(s, in), true));
  return doc;
}

json describe_analysis(const SchemeAnalysis& a) {
  json doc;
  doc["parameters"] = a.parameters;
  doc["krull_dimension"] = a.krull_dimension;
  doc["tangent_dimension_at_origin"] = a.tangent_dimension_at_origin;
  doc["smooth_at_origin"] = a.krull_dimension >= 0 &&
                            static_cast<std::size_t>(a.krull_dimension) == a.tangent_dimension_at_origin;
  doc["multiplicity"] = a.multiplicity ? json(*a.multiplicity) : json(nullptr);
  doc["coordinate_subspace"] = a.coordinate.is_coordinate;
  json free = json::array();
  for (auto i : a.coordinate.free_parameters) free.push_back("c" + std::to_string(i + 1));
  doc["free_parameters"] = free;
  doc["groebner_basis_size"] = a.groebner_size;
  return doc;
}

/// With --order, also prints the reduced Groebner basis in that order.
void add_groebner(json& doc, const std::vector<ParamPoly>& gens, std::size_t m, const Inputs& in,
                  const GroebnerBudget& budget) {
  if (!in.order) return;
  const TermOrder order = *in.order == "lex" ? TermOrder::Lex : TermOrder::DegRevLex;
  const auto gb = buchberger(gens, m, order, budget);
  const auto names = RingContext::parameters(m);
  json g = json::array();
  for (const auto& f : gb.generators()) g.push_back(format(f, names));
  doc["groebner_basis"] = {{"order", *in.order}, {"generators", g}};
}

json cmd_analyze(const Session& s, const Inputs& in) {
  GroebnerBudget budget;
  budget.max_pairs = in.budget_pairs;
  json doc = header("analyze");
  if (!in.polys.empty()) {
    const std::size_t m = in.params.value_or(std::max<std::size_t>(1, max_c_index(in.polys).value_or(1)));
    const auto names = RingContext::parameters(m);
    std::vector<ParamPoly> gens;
    for (const auto& g : parse_polynomial_list(in.polys, names)) gens.push_back(g);
    doc.update(describe_analysis(analyze(gens, m, budget)));
    add_groebner(doc, gens, m, in, budget);
    return doc;
  }
  const SchemeIdeal R = build_scheme(s, in);
  doc["route"] = in.route;
  doc.update(describe_scheme(s, R, false));
  doc.update(describe_analysis(analyze(R.polynomials(), R.parameters.size(), budget)));
  add_groebner(doc, R.polynomials(), R.parameters.size(), in, budget);
  return doc;
}

json cmd_lexpoint(const Session& s, const Inputs& in) {
  const QuotientContext S(s.ideal(in.I, "--I"));
  if (in.hp.empty()) throw ParseError("missing --hp");
  const UPoly p = UPoly::parse(in.hp);
  const auto r = lex_point(S, p);
  json doc = header("lexpoint");
  doc["hilbert_polynomial"] = p.to_string();
  doc["quotient_hilbert_polynomial"] = S.hilbert().polynomial.to_string();
  doc["degree"] = r.degree;
  if (r.ideal) {
    doc["lex_ideal"] = {{"generators", s.show(r.ideal->generators)}, {"ideal", s.show(r.ideal->lifted)}};
    doc["empty"] = false;
  } else {
    doc["empty"] = true;
    doc["reason"] = r.reason;
  }
  return doc;
}

json cmd_mlcheck(const Session& s, const Inputs& in) {
  const auto I = s.ideal(in.I, "--I");
  json doc = header("mlcheck");
  doc["family"] = to_string(macaulay_lex_recognizer(I));
  doc["quasi_stable"] = is_quasi_stable(I);
  const auto pw = is_piecewise_lexsegment(I);
  doc["piecewise_lexsegment"] = pw.piecewise;
  if (pw.witness)
    doc["witness"] = {{"a", format_term(pw.witness->first, s.ring())}, {"b", format_term(pw.witness->second, s.ring())}};
  if (!is_quasi_stable(I)) return doc;
  const auto sat = saturation(I);
  doc["saturated"] = sat == I;
  doc["saturation"] = s.show(sat);
  doc["saturation_family"] = to_string(macaulay_lex_recognizer(sat));
  const auto W = s.terms(in.W);
  if (W.empty()) return doc;
  // Growth of W against the lex segment of the same size in R/I^sat.
  const unsigned d = W.front().degree();
  for (const auto& w : W)
    if (w.degree() != d) throw PreconditionError("--W must be terms of one degree");
  const QuotientContext S(sat);
  const auto L = lex_segment(S, d, W.size());
  const auto gw = growth_count(S, W), gl = growth_count(S, L);
  doc["growth"] = {{"W", s.show(W)},          {"W_growth", gw}, {"lex_segment", s.show(L)},
                   {"lex_growth", gl},        {"obstructed", gl > gw}};
  return doc;
}

json cmd_qsposition(const Session& s, const Inputs& in) {
  const auto I = s.ideal(in.I, "--I");
  SearchOptions opt;
  opt.seed = in.seed;
  opt.max_tries = in.max_tries;
  const auto r = quasi_stable_position(s.polys(in.F), I, opt);
  json doc = header("qsposition");
  doc["success"] = r.success;
  doc["tries"] = r.tries;
  doc["entry_bound"] = r.bound;
  doc["seed"] = in.seed;
  doc["block"] = lower_block(I);
  if (!r.success) return doc;
  json m = json::array();
  for (const auto& row : r.change->matrix()) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(to_string(x));
    m.push_back(jr);
  }
  doc["change"] = m;
  json marked = json::array();
  for (const auto& f : r.marked)
    marked.push_back({{"head", format_term(f.head, s.ring())}, {"polynomial", s.show(f.polynomial())}});
  doc["marked"] = marked;
  doc["heads_ideal"] = s.show(*r.heads_ideal);
  return doc;
}

int emit(const json& doc, bool as_json, std::ostream& out) {
  if (as_json) out << doc.dump(2) << '\n';
  else print_text(doc, out);
  return kOk;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void print_text(const json& doc, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!doc.is_object()) {
    out << pad << scalar(doc) << '\n';
    return;
  }
  for (const auto& [key, v] : doc.items()) {
    if (key == "schema") continue;
    if (v.is_object()) {
      out << pad << key << ":\n";
      print_text(v, out, indent + 2);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
      out << pad << key << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          std::string line;
          for (const auto& [k2, v2] : e.items()) line += (line.empty() ? "" : "  ") + k2 + "=" + scalar(v2);
          out << pad << "  - " << line << '\n';
        } else {
          out << pad << "  - " << scalar(e) << '\n';
        }
      }
    } else if (v.is_array()) {
      std::string line;
      for (const auto& e : v) line += (line.empty() ? "" : ", ") + scalar(e);
      out << pad << key << ": " << (v.empty() ? "(none)" : line) << '\n';
    } else {
      out << pad << key << ": " << scalar(v) << '\n';
    }
  }
}

int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative marked bases, marked schemes and lex-points over monomial quotients", "relmark"};
  app.require_subcommand(1);
  app.fallthrough();
  Inputs in;
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON document");
  app.add_option("--ring", in.ring, "Number of variables (default: inferred)")->check(CLI::PositiveNumber);
  app.add_flag("--w", in.with_w, "Add an extra smallest variable w at index 0");

  auto ideal_opt = [&](CLI::App* c, const char* flag, std::string& target, const char* what) {
    c->add_option(flag, target, what);
  };

  auto* pom = app.add_subcommand("pommaret", "Pommaret basis and invariants of a monomial ideal");
  ideal_opt(pom, "--I", in.I, "Monomial ideal, e.g. \"x3^2, x2^5\" (- for stdin)");

  auto* red = app.add_subcommand("reduce", "Normal forms modulo a marked set over J");
  ideal_opt(red, "--J", in.J, "Monomial ideal of the heads");
  ideal_opt(red, "--I", in.I, "Optional inner ideal; heads become P_J minus P_I");
  red->add_option("--F", in.F, "Marked polynomials, each marked on its unique term in J");
  red->add_option("--p", in.p, "Polynomials to reduce");

  auto scheme_opts = [&](CLI::App* c) {
    ideal_opt(c, "--I", in.I, "Inner saturated quasi-stable ideal");
    ideal_opt(c, "--J", in.J, "Outer quasi-stable ideal");
    c->add_option("--t", in.t, "Truncation degree (at least rho(J) - 1)");
    c->add_option("--route", in.route, "relative (default) or full")->check(CLI::IsMember({"relative", "full"}));
    c->add_option("--Z", in.Z, "Containment polynomials for the full route (default: generators of I)");
  };
  auto* rel = app.add_subcommand("relscheme", "Generators of the (relative) marked scheme ideal");
  scheme_opts(rel);

  auto* ana = app.add_subcommand("analyze", "Dimension, tangent space and shape of a scheme ideal");
  scheme_opts(ana);
  ana->add_option("--polys", in.polys, "Explicit generators in c1..cm instead of --I/--J");
  ana->add_option("--params", in.params, "Number of parameters for --polys");
  ana->add_option("--budget-pairs", in.budget_pairs, "Cap on S-pairs for Buchberger's algorithm");
  ana->add_option("--order", in.order, "Also print the reduced Groebner basis (degrevlex or lex)")
      ->check(CLI::IsMember({"degrevlex", "lex"}));

  auto* lex = app.add_subcommand("lexpoint", "Lex ideal of R/I with a given Hilbert polynomial");
  ideal_opt(lex, "--I", in.I, "Saturated quasi-stable ideal");
  lex->add_option("--hp", in.hp, "Hilbert polynomial in z, e.g. \"5*z - 3\"");

  auto* ml = app.add_subcommand("mlcheck", "Macaulay-Lex family recognition and growth diagnostics");
  ideal_opt(ml, "--I", in.I, "Monomial ideal");
  ml->add_option("--W", in.W, "Terms of one degree to compare with the lex segment of R/I^sat");

  auto* qs = app.add_subcommand("qsposition", "Random change of the lower variables into quasi-stable position");
  ideal_opt(qs, "--I", in.I, "Saturated quasi-stable ideal");
  qs->add_option("--F", in.F, "Homogeneous polynomials of one degree");
  qs->add_option("--seed", in.seed, "Random seed");
  qs->add_option("--max-tries", in.max_tries, "Number of attempts");

  auto* ex = app.add_subcommand("example", "Run and verify a worked example");
  ex->add_option("name", in.example, "Example name (see --list)");
  bool list = false;
  ex->add_flag("--list", list, "List the example names");
  ex->add_option("--n", in.example_options.n, "Largest variable index");
  ex->add_option("--p", in.example_options.p, "Exponent p");
  ex->add_option("--k", in.example_options.k, "Exponent k");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (as_json) out << json{{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
    err << "relmark: " << message << '\n';
    return code;
  };

  try {
    if (ex->parsed()) {
      if (list || in.example.empty()) {
        for (const auto& n : example_names()) out << n << '\n';
        return in.example.empty() && !list ? kParseError : kOk;
      }
      const json doc = run_example(in.example, in.example_options);
      emit(doc, as_json, out);
      return doc.value("passed", false) ? kOk : kMismatch;
    }
    Session s(in, input);
    json doc;
    if (pom->parsed()) doc = cmd_pommaret(s, in);
    else if (red->parsed()) doc = cmd_reduce(s, in);
    else if (rel->parsed()) doc = cmd_relscheme(s, in);
    else if (ana->parsed()) doc = cmd_analyze(s, in);
    else if (lex->parsed()) doc = cmd_lexpoint(s, in);
    else if (ml->parsed()) doc = cmd_mlcheck(s, in);
    else if (qs->parsed()) doc = cmd_qsposition(s, in);
    const int code = emit(doc, as_json, out);
    if (qs->parsed() && !doc.value("success", false)) return kMismatch;
    return code;
  } catch (const ParseError& e) {
    return fail(kParseError, "parse", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(kBudgetExceeded, "budget", e.what());
  } catch (const PreconditionError& e) {
    return fail(kPreconditionFailed, "precondition", e.what());
  } catch (const std::exception& e) {
    return fail(kOther, "internal", e.what());
  }
}

}  // namespace relmark::cli
