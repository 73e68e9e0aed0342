#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "relmark/text.hpp"

using relmark::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "relmark");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "--json");
  const auto r = call(std::move(args), input);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("pommaret command") {
  const auto doc = call_json({"pommaret", "--I", "x3^2, x2^5", "--ring", "4"});
  CHECK(doc["schema"] == 1);
  CHECK(doc["pommaret_basis"] == json({"x3^2", "x3*x2^5", "x2^5"}));
  CHECK(doc["regularity"] == 6);
  CHECK(doc["hilbert_polynomial"] == "10*z - 15");
  // Same answer from stdin and with the ring inferred.
  CHECK(call_json({"pommaret", "--I", "-"}, "x3^2,\n x2^5\n")["pommaret_basis"] == doc["pommaret_basis"]);
  const auto text = call({"pommaret", "--I", "x3^2, x2^5"});
  CHECK(text.code == 0);
  CHECK(text.out.find("pommaret_basis: x3^2, x3*x2^5, x2^5") != std::string::npos);
}

TEST_CASE("reduce command") {
  auto doc = call_json({"reduce", "--J", "x3^2, x3*x2, x2^3", "--F", "x3^2, x3*x2 - 4*x2^2, x2^3", "--p", ""});
  CHECK(doc["normal_forms"] == json({"0"}));
  doc = call_json({"reduce", "--I", "x3^2, x2^3", "--J", "x3^2, x3*x2, x2^3", "--F", "x3*x2 - 4*x2^2", "--p",
                   "x3*(x3*x2 - 4*x2^2)"});
  CHECK(doc["normal_forms"][0]["normal_form"] == "x3^2*x2 - 16*x2^3");
}

TEST_CASE("scheme commands") {
  auto doc = call_json({"relscheme", "--I", "x3^2, x2^3", "--J", "x3, x2^3", "--ring", "4", "--t", "0"});
  CHECK(doc["parameters"] == 3);
  CHECK(doc["generator_count"] == 6);
  doc = call_json({"analyze", "--I", "x3^2, x2^3", "--J", "x3, x2^3", "--t", "0"});
  CHECK(doc["krull_dimension"] == 0);
  CHECK(doc["multiplicity"] == 4);
  doc = call_json({"analyze", "--route", "full", "--I", "x3^2, x2^3", "--J", "x3, x2^3", "--t", "0"});
  CHECK(doc["parameters"] == 12);
  doc = call_json({"analyze", "--polys", "c1*c3 - c2^2, c2*c4 - c3^2, c1*c4 - c2*c3"});
  CHECK(doc["krull_dimension"] == 2);
  CHECK(doc["tangent_dimension_at_origin"] == 4);
  doc = call_json({"analyze", "--polys", "c1*c2 - c3, c3", "--order", "lex"});
  CHECK(doc["groebner_basis"]["generators"] == json({"c2*c1", "c3"}));
  CHECK(call({"analyze", "--polys", "c1", "--order", "weird"}).code == relmark::cli::kParseError);
  CHECK(call({"analyze", "--polys", "c1*c3 - c2^2, c2*c4 - c3^2, c1*c4 - c2*c3", "--budget-pairs", "0"}).code ==
        relmark::cli::kBudgetExceeded);
}

TEST_CASE("lex commands") {
  auto doc = call_json({"lexpoint", "--I", "x3^2, x2^5", "--hp", "5*z - 3"});
  CHECK(doc["empty"] == false);
  CHECK(doc["lex_ideal"]["ideal"] == json({"x3^2", "x3*x2", "x3*x1^2", "x2^5"}));
  doc = call_json({"lexpoint", "--I", "x3^2", "--ring", "4", "--hp", "(z+3)*(z+2)*(z+1)/6"});
  CHECK(doc["empty"] == true);
  doc = call_json({"mlcheck", "--I", "x3^2, x3*x2^7, x3*x2*x1^7, x3*x2*x1^2*x0^7", "--W", "x3*x1^3"});
  CHECK(doc["family"] == "abedelfatah-b");
  CHECK(doc["saturation"] == json({"x3^2", "x3*x2^7", "x3*x2*x1^2"}));
  CHECK(doc["growth"]["W_growth"] == 2);
  CHECK(doc["growth"]["lex_growth"] == 3);
  CHECK(doc["growth"]["obstructed"] == true);
  doc = call_json({"--w", "mlcheck", "--I", "x3^2, x3*x2^3, x3*x2*x1^3, x3*x2*x1^2*x0^3"});
  CHECK(doc["quasi_stable"] == true);
  CHECK(doc["saturated"] == true);
}

TEST_CASE("qsposition command") {
  auto doc = call_json({"qsposition", "--I", "x2^7", "--F", "x1*x2^6"});
  CHECK(doc["success"] == true);
  CHECK(doc["tries"] == 1);
  doc = call_json({"qsposition", "--I", "x2^7", "--F", "x0*x2^6", "--seed", "9"});
  CHECK(doc["success"] == true);
  CHECK(doc["marked"][0]["head"] == "x2^6*x1");
  CHECK(call_json({"qsposition", "--I", "x2^7", "--F", "x0*x2^6", "--seed", "9"}) == doc);
  CHECK(call({"qsposition", "--I", "x2^7", "--F", "x0*x2^6", "--max-tries", "1"}).code == relmark::cli::kMismatch);
}

TEST_CASE("exit codes") {
  using namespace relmark::cli;
  CHECK(call({}).code == kParseError);
  CHECK(call({"frobnicate"}).code == kParseError);
  CHECK(call({"pommaret", "--I", "x3^^2"}).code == kParseError);
  CHECK(call({"pommaret"}).code == kParseError);
  CHECK(call({"pommaret", "--I", "x5", "--ring", "3"}).code == kParseError);
  CHECK(call({"lexpoint", "--I", "x3*x2", "--hp", "z"}).code == kPreconditionFailed);
  CHECK(call({"reduce", "--J", "x3^2", "--F", "x2"}).code == kPreconditionFailed);
  CHECK(call({"example", "nope"}).code == kPreconditionFailed);
  CHECK(call({"--help"}).code == kOk);
  const auto r = call({"--json", "lexpoint", "--I", "x3*x2", "--hp", "z"});
  CHECK(json::parse(r.out)["error"]["kind"] == "precondition");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("named examples") {
  using namespace relmark::cli;
  const auto names = example_names();
  CHECK(names.size() == 9);
  for (const auto& n : names) {
    const auto r = call({"--json", "example", n});
    const auto doc = json::parse(r.out);
    CHECK(r.code == (doc["passed"] == true ? kOk : kMismatch));
    CHECK(doc["checks"].size() > 0);
  }
  const auto doc = call_json({"example", "fat-point", "--n", "3", "--p", "3"});
  CHECK(doc["passed"] == true);
  CHECK(doc["generators"] == json({"c1^2", "c2*c1", "c2^2", "c3*c1", "c3*c2", "c3^2"}));
  CHECK(doc["analysis"]["tangent_dimension_at_origin"] == 3);
  CHECK(doc["analysis"]["multiplicity"] == 4);
}

TEST_CASE("printed polynomials parse back") {
  const auto ring = relmark::RingContext::x_ring(4);
  auto doc = call_json({"reduce", "--J", "x3^2, x3*x2, x2^3", "--F", "x3^2, x3*x2 - 4*x2^2, x2^3", "--p",
                        "x3*x1^3 - 1/2*x2*x1^2*x0 + x1^4, 7/3*x0^5 + x3*x0^4"});
  for (const auto& f : doc["normal_forms"]) {
    for (const char* key : {"input", "normal_form"}) {
      const auto text = f[key].get<std::string>();
      CHECK(relmark::format(relmark::parse_polynomial(text, ring), ring) == text);
    }
  }
  doc = call_json({"relscheme", "--I", "x3^2, x2^5", "--J", "x3^2, x3*x2, x3*x1^2, x2^5", "--t", "2"});
  const auto names = relmark::RingContext::parameters(doc["parameters"].get<std::size_t>());
  for (const auto& g : doc["generic_set"]) {
    const auto text = g.get<std::string>();
    CHECK(relmark::format(relmark::parse_param_polynomial(text, ring, names), ring, names) == text);
  }
  for (const auto& g : doc["generators"]) {
    const auto text = g["polynomial"].get<std::string>();
    CHECK(relmark::format(relmark::parse_polynomial(text, names), names) == text);
  }
}
