#include "expstab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace expstab {

const char* to_string(VectorNorm n) {
  switch (n) {
    case VectorNorm::L1: return "l1";
    case VectorNorm::L2: return "l2";
    case VectorNorm::Linf: return "linf";
  }
  return "?";
}

VectorNorm dual_norm_of(VectorNorm n) {
  switch (n) {
    case VectorNorm::L1: return VectorNorm::Linf;
    case VectorNorm::L2: return VectorNorm::L2;
    case VectorNorm::Linf: return VectorNorm::L1;
  }
  return VectorNorm::L2;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols != rhs.rows)
    throw std::invalid_argument("Matrix multiply: inner dimensions differ");
  Matrix out(rows, rhs.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j)
        out(i, j) += aik * rhs(k, j);
    }
  return out;
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
  if (x.size() != cols)
    throw std::invalid_argument("Matrix::apply: dimension mismatch");
  std::vector<double> y(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> Matrix::apply_transpose(const std::vector<double>& x) const {
  if (x.size() != rows)
    throw std::invalid_argument("Matrix::apply_transpose: dimension mismatch");
  std::vector<double> y(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t j = 0; j < cols; ++j) y[j] += (*this)(i, j) * xi;
  }
  return y;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void Matrix::scale(double s) {
  for (double& v : a) v *= s;
}

double vector_norm(const std::vector<double>& x, VectorNorm n) {
  switch (n) {
    case VectorNorm::L1: {
      double s = 0.0;
      for (double v : x) s += std::abs(v);
      return s;
    }
    case VectorNorm::L2: {
      // scaled to avoid overflow on large components
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      if (m == 0.0) return 0.0;
      double s = 0.0;
      for (double v : x) {
        const double r = v / m;
        s += r * r;
      }
      return m * std::sqrt(s);
    }
    case VectorNorm::Linf: {
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      return m;
    }
  }
  return 0.0;
}

void normalize(std::vector<double>& x, VectorNorm n) {
  const double s = vector_norm(x, n);
  if (s == 0.0) throw std::invalid_argument("normalize: zero vector");
  for (double& v : x) v /= s;
}

namespace {

double l2_norm_power_iteration(const Matrix& a) {
  constexpr int kMaxIter = 100;
  constexpr double kRelTol = 1e-10;
  const std::size_t d = a.cols;
  if (d == 0) return 0.0;
  if (a.max_abs() == 0.0) return 0.0;
  if (d == 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) s += a(i, 0) * a(i, 0);
    return std::sqrt(s);
  }
  // Deterministic, slightly staggered start so symmetric cases cannot place
  // the iterate orthogonal to the top eigenvector.
  std::vector<double> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = 1.0 + 1e-3 * double(i);
  normalize(v, VectorNorm::L2);
  double lambda = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    // w = A^T(A v): one step of power iteration on A^T A
    std::vector<double> w = a.apply_transpose(a.apply(v));
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < d; ++i) rayleigh += v[i] * w[i];
    const double nw = vector_norm(w, VectorNorm::L2);
    if (nw == 0.0) return 0.0;
    for (std::size_t i = 0; i < d; ++i) v[i] = w[i] / nw;
    if (it > 0 && std::abs(rayleigh - lambda) <= kRelTol * std::abs(rayleigh)) {
      lambda = rayleigh;
      break;
    }
    lambda = rayleigh;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace

double induced_norm(const Matrix& a, VectorNorm n) {
  switch (n) {
    case VectorNorm::L1: {  // max column absolute sum
      double best = 0.0;
      for (std::size_t j = 0; j < a.cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows; ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case VectorNorm::Linf: {  // max row absolute sum
      double best = 0.0;
      for (std::size_t i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case VectorNorm::L2:
      return l2_norm_power_iteration(a);
  }
  return 0.0;
}

}  // namespace expstab
