#include "eddeg/exact_linalg.hpp"

#include <utility>

namespace eddeg {

namespace {

void require_square(const ExactMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw StructuralError("matrix is not square");
}

// Row-reduces m in place; returns the pivot columns. When `sign` is given it
// tracks the determinant sign flips from row swaps.
std::vector<std::size_t> row_reduce(ExactMatrix& m, int* sign) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (sign) *sign = -*sign;
    }
    const GaussianRational inv = GaussianRational(1) / m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const GaussianRational factor = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ExactMatrix identity_matrix(std::size_t n) {
  ExactMatrix m(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

GaussianRational determinant(ExactMatrix m) {
  require_square(m);
  int sign = 1;
  const auto pivots = row_reduce(m, &sign);
  if (pivots.size() < m.size()) return 0;
  GaussianRational det(sign);
  for (std::size_t i = 0; i < m.size(); ++i) det *= m[i][i];
  return det;
}

std::optional<ExactMatrix> inverse(ExactMatrix m) {
  require_square(m);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  const auto pivots = row_reduce(m, nullptr);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  // Back substitution on the echelon form.
  for (std::size_t r = n; r-- > 0;) {
    const GaussianRational inv = GaussianRational(1) / m[r][r];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (m[i][r].is_zero()) continue;
      const GaussianRational factor = m[i][r];
      for (std::size_t k = r; k < 2 * n; ++k) m[i][k] -= factor * m[r][k];
    }
  }
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + static_cast<long>(n), m[i].end());
  return out;
}

std::size_t rank(ExactMatrix m) { return row_reduce(m, nullptr).size(); }

std::vector<GaussianRational> multiply(const ExactMatrix& m, const std::vector<GaussianRational>& v) {
  std::vector<GaussianRational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw StructuralError("matrix-vector size mismatch");
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!m[i][k].is_zero() && !v[k].is_zero()) out[i] += m[i][k] * v[k];
  }
  return out;
}

}  // namespace eddeg
