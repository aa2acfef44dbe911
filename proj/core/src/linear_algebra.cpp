#include "lfl/linear_algebra.hpp"

#include <stdexcept>

namespace lfl {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matmul shape mismatch");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix r(a.size(), Vector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

Vector matvec(const Matrix& a, const Vector& x) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("matvec shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  }
  return r;
}

bool is_zero_matrix(const Matrix& a) {
  for (const auto& row : a) {
    for (const auto& v : row) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear shape mismatch");
  std::size_t cols = a.empty() ? 0 : a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug, cols);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (!aug[r][cols].is_zero()) return std::nullopt;
  }
  LinearSolution sol{Vector(cols), pivots.size()};
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.x[pivots[r]] = aug[r][cols];
  return sol;
}

std::vector<Vector> kernel_basis(const Matrix& a, std::size_t cols) {
  Matrix m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lfl
