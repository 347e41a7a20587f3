#pragma once

#include "famcode/poly.hpp"

#include <optional>
#include <vector>

namespace famcode {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identityMatrix(std::size_t n);
/// Inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> invert(const Matrix& A);
std::size_t matrixRank(Matrix A);

/// Maximum bipartite matching rows -> columns over the nonzero pattern;
/// returns match[row] = column or -1.
std::vector<int> maxMatching(const std::vector<std::vector<bool>>& pattern);

}  // namespace famcode
