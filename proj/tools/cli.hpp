#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace relmark::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParseError = 2,
  kPreconditionFailed = 3,
  kBudgetExceeded = 4,
  kMismatch = 5,
};

/// Runs one command line (args[0] is the program name). Output goes to
/// `out` as text, or as one JSON document with --json; diagnostics go to
/// `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Prints a JSON document as indented `key: value` lines.
void print_text(const nlohmann::json& doc, std::ostream& out, int indent = 0);

/// A named worked example: the computed document plus its checks.
struct ExampleOptions {
  unsigned n = 3;
  unsigned p = 3;
  unsigned k = 2;
};
std::vector<std::string> example_names();
/// Throws PreconditionError for unknown names. The document carries a
/// "checks" array of {name, expected, actual, ok}.
nlohmann::json run_example(const std::string& name, const ExampleOptions& options);

}  // namespace relmark::cli
