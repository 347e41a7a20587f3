#include "famcode/linalg.hpp"

#include <functional>

namespace famcode {

Matrix identityMatrix(std::size_t n) {
  Matrix I(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

std::optional<Matrix> invert(const Matrix& A) {
  std::size_t n = A.size();
  Matrix M = A, I = identityMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(I[piv], I[col]);
    Rational inv = 1 / M[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      M[col][j] *= inv;
      I[col][j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        M[r][j] -= f * M[col][j];
        I[r][j] -= f * I[col][j];
      }
    }
  }
  return I;
}

std::size_t matrixRank(Matrix A) {
  std::size_t rank = 0;
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (A[r][col] == 0) continue;
      Rational f = A[r][col] / A[rank][col];
      for (std::size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> maxMatching(const std::vector<std::vector<bool>>& pattern) {
  std::size_t rows = pattern.size();
  std::size_t cols = rows ? pattern[0].size() : 0;
  std::vector<int> matchRow(rows, -1), matchCol(cols, -1);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<bool> seen(cols, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t row) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (!pattern[row][c] || seen[c]) continue;
        seen[c] = true;
        if (matchCol[c] < 0 || augment(static_cast<std::size_t>(matchCol[c]))) {
          matchCol[c] = static_cast<int>(row);
          matchRow[row] = static_cast<int>(c);
          return true;
        }
      }
      return false;
    };
    augment(r);
  }
  return matchRow;
}

}  // namespace famcode
