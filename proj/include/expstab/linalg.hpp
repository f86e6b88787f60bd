#pragma once

// linalg.hpp — dense matrices and the induced-norm machinery the evolution
// operators need. Dimensions stay tiny (the tool targets d <= ~8), so this is
// a plain row-major buffer, no BLAS.

#include <cstddef>
#include <vector>

namespace expstab {

enum class VectorNorm { L1, L2, Linf };

const char* to_string(VectorNorm n);

/// Dual pairing: l1 <-> linf, l2 <-> l2.
VectorNorm dual_norm_of(VectorNorm n);

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  Matrix operator*(const Matrix& rhs) const;

  std::vector<double> apply(const std::vector<double>& x) const;
  // y = A^T x (adjoint application without materializing the transpose)
  std::vector<double> apply_transpose(const std::vector<double>& x) const;

  double max_abs() const;
  void scale(double s);

  bool operator==(const Matrix& rhs) const = default;
};

double vector_norm(const std::vector<double>& x, VectorNorm n);
void normalize(std::vector<double>& x, VectorNorm n);

/// Operator norm of A induced by the given vector norm. L1 and Linf are exact
/// (max column / row absolute sum). L2 is estimated by power iteration on
/// A^T A (Rayleigh quotient, at most 100 iterations, relative tolerance
/// 1e-10) and is an estimate, not a certified bound.
double induced_norm(const Matrix& a, VectorNorm n);

}  // namespace expstab
