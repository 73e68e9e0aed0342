#include "relmark/text.hpp"

#include <cctype>

#include "relmark/errors.hpp"

namespace relmark {

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("a ring needs at least one variable");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw PreconditionError("duplicate variable name '" + names_[i] + "'");
  }
}

RingContext RingContext::x_ring(std::size_t nvars, bool leading_w) {
  std::vector<std::string> names;
  if (leading_w) names.emplace_back("w");
  for (std::size_t i = 0; names.size() < nvars; ++i) names.push_back("x" + std::to_string(i));
  return RingContext(std::move(names));
}

RingContext RingContext::parameters(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("c" + std::to_string(i));
  if (names.empty()) names.emplace_back("c1");
  return RingContext(std::move(names));
}

RingContext RingContext::univariate(std::string name) { return RingContext({std::move(name)}); }

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void RingContext::check(const Term& t) const {
  if (t.span() > names_.size())
    throw PreconditionError("term uses a variable outside the ring of " + std::to_string(names_.size()) +
                            " variables");
}

std::strong_ordering RingContext::compare_terms(TermOrder order, const Term& s, const Term& t) const {
  check(s);
  check(t);
  return compare(order, s, t);
}

RingContext RingContext::joined(const RingContext& other) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), other.names_.begin(), other.names_.end());
  return RingContext(std::move(names));
}

std::string format_term(const Term& t, const RingContext& ring) {
  ring.check(t);
  if (t.is_one()) return "1";
  std::string out;
  for (std::size_t i = t.span(); i-- > 0;) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out;
}

namespace {

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty())
    out = negative ? "-" + body : body;
  else
    out += (negative ? " - " : " + ") + body;
}

std::string scaled_term(const Rational& abs_coeff, const Term& t, const RingContext& ring) {
  if (t.is_one()) return abs_coeff.get_str();
  if (abs_coeff == 1) return format_term(t, ring);
  return abs_coeff.get_str() + "*" + format_term(t, ring);
}

}  // namespace

std::string format(const QPoly& p, const RingContext& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : p) append_signed(out, sgn(c) < 0, scaled_term(abs(c), t, ring));
  return out;
}

std::string format(const ParamCoeffPoly& p, const RingContext& xring, const RingContext& params) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : p) {
    if (c.size() == 1) {
      const auto& [ct, cc] = c.leading();
      std::string body;
      if (ct.is_one()) {
        body = scaled_term(abs(cc), t, xring);
      } else {
        body = scaled_term(abs(cc), ct, params);
        if (!t.is_one()) body += "*" + format_term(t, xring);
      }
      append_signed(out, sgn(cc) < 0, body);
    } else {
      std::string body = "(" + format(c, params) + ")";
      if (!t.is_one()) body += "*" + format_term(t, xring);
      append_signed(out, false, body);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

  QPoly parse_all() {
    QPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  QPoly expr() {
    QPoly acc;
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      if (!starts_factor()) {
        if (first && c != '+' && c != '-') fail("expected a term");
        fail("expected a term after sign");
      }
      QPoly t = product();
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  QPoly product() {
    QPoly acc = power();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        QPoly d = power();
        if (d.size() != 1 || !d.leading().first.is_one()) fail("division is only allowed by a nonzero number");
        acc = acc.scaled(1 / d.leading().second);
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  QPoly power() {
    QPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      QPoly r = QPoly::constant(Rational(1));
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  QPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QPoly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return QPoly::monomial(Term::variable(*idx));
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0) || (text[i] == '\n' && depth == 0)) {
      std::string_view part = text.substr(start, i - start);
      bool blank = true;
      for (char ch : part) blank = blank && std::isspace(static_cast<unsigned char>(ch));
      if (!blank) parts.push_back(part);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return parts;
}

std::optional<std::size_t> max_prefixed_index(std::string_view text, char prefix) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != prefix) continue;
    if (i > 0 && std::isalpha(static_cast<unsigned char>(text[i - 1]))) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) continue;
    const std::size_t k = std::stoul(std::string(text.substr(i + 1, j - i - 1)));
    best = best ? std::max(*best, k) : k;
  }
  return best;
}

}  // namespace

QPoly parse_polynomial(std::string_view text, const RingContext& ring) { return Parser(text, ring).parse_all(); }

Term parse_term(std::string_view text, const RingContext& ring) {
  QPoly p = parse_polynomial(text, ring);
  if (p.size() != 1 || p.leading().second != 1) throw ParseError("'" + std::string(text) + "' is not a term");
  return p.leading().first;
}

std::vector<QPoly> parse_polynomial_list(std::string_view text, const RingContext& ring) {
  std::vector<QPoly> out;
  for (auto part : split_top_level(text)) out.push_back(parse_polynomial(part, ring));
  return out;
}

std::vector<Term> parse_term_list(std::string_view text, const RingContext& ring) {
  std::vector<Term> out;
  for (auto part : split_top_level(text)) out.push_back(parse_term(part, ring));
  return out;
}

ParamCoeffPoly parse_param_polynomial(std::string_view text, const RingContext& xring,
                                      const RingContext& params) {
  const RingContext joint = xring.joined(params);
  const QPoly p = parse_polynomial(text, joint);
  const std::size_t nx = xring.nvars();
  std::vector<std::pair<Term, ParamPoly>> out;
  for (const auto& [t, c] : p) {
    std::vector<Term::Exponent> xe(nx, 0), ce(params.nvars(), 0);
    for (std::size_t i = 0; i < t.span(); ++i) (i < nx ? xe[i] : ce[i - nx]) = t[i];
    out.emplace_back(Term(std::move(xe)), ParamPoly::monomial(Term(std::move(ce)), c));
  }
  return ParamCoeffPoly::from_terms(std::move(out));
}

std::optional<std::size_t> max_x_index(std::string_view text) { return max_prefixed_index(text, 'x'); }
std::optional<std::size_t> max_c_index(std::string_view text) { return max_prefixed_index(text, 'c'); }

}  // namespace relmark
