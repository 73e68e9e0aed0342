#pragma once

#include <gmpxx.h>

#include <string>

namespace relmark {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace relmark
