#pragma once

#include <cstddef>
#include <vector>

#include "relmark/rational.hpp"

namespace relmark {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row (zero rows are removed).
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

}  // namespace relmark
