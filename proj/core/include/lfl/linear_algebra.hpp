#pragma once

#include <optional>
#include <vector>

#include "lfl/scalar.hpp"

namespace lfl {

using Vector = std::vector<Scalar>;
/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

Matrix identity_matrix(std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
bool is_zero_matrix(const Matrix& a);

struct LinearSolution {
  Vector x;           // one solution, free variables set to zero
  std::size_t rank;   // rank of the coefficient matrix
};

/// Solves a x = b exactly; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b);

/// Basis of {x : a x = 0}; columns = a[0].size() (or `cols` when a is empty).
std::vector<Vector> kernel_basis(const Matrix& a, std::size_t cols);

}  // namespace lfl
