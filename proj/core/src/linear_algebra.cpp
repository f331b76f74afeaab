#include "toradd/linear_algebra.hpp"

#include <utility>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

bool is_square(const IntegerMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) return false;
  }
  return true;
}

// In-place Bareiss elimination over the first `pivot_cols` columns. Returns
// the sign flips caused by row swaps, or 0 when a pivot column is all zero.
int bareiss_eliminate(IntegerMatrix& m, std::size_t pivot_cols) {
  const std::size_t n = m.size();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < pivot_cols && k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace

Integer determinant(IntegerMatrix m) {
  if (!is_square(m)) throw DimensionError("determinant of a non-square matrix");
  if (m.empty()) return 1;
  const int sign = bareiss_eliminate(m, m.size());
  if (sign == 0) return 0;
  Integer det = m.back().back();
  return sign > 0 ? det : Integer(-det);
}

std::vector<Rational> solve(IntegerMatrix a, const std::vector<Integer>& b) {
  const std::size_t n = a.size();
  if (!is_square(a) || b.size() != n) {
    throw DimensionError("linear system shape mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (bareiss_eliminate(a, n) == 0) {
    throw InputError("singular linear system");
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
    x[i].canonicalize();
  }
  return x;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace toradd
