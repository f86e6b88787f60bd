#include "expstab/family.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace expstab {

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::ScalarSequence: return "scalar-sequence";
    case FamilyKind::Diagonal: return "diagonal";
    case FamilyKind::DenseSequence: return "dense-sequence";
    case FamilyKind::ClosedFormLogNorm: return "closed-form-log-norm";
  }
  return "?";
}

EvolutionFamily EvolutionFamily::scalar_sequence(ScalarFn coef, VectorNorm norm,
                                                 std::string label) {
  if (!coef) throw std::invalid_argument("scalar_sequence: null coefficient fn");
  EvolutionFamily f;
  f.kind_ = FamilyKind::ScalarSequence;
  f.dim_ = 1;
  f.norm_ = norm;
  f.scalar_ = coef;
  f.scalar_log_ = [coef](index_t n) { return std::log(std::abs(coef(n))); };
  f.label_ = std::move(label);
  return f;
}

EvolutionFamily EvolutionFamily::scalar_sequence_log(ScalarFn log_abs_coef,
                                                     ScalarFn plain_coef,
                                                     VectorNorm norm,
                                                     std::string label) {
  if (!log_abs_coef || !plain_coef)
    throw std::invalid_argument("scalar_sequence_log: null coefficient fn");
  EvolutionFamily f;
  f.kind_ = FamilyKind::ScalarSequence;
  f.dim_ = 1;
  f.norm_ = norm;
  f.scalar_ = std::move(plain_coef);
  f.scalar_log_ = std::move(log_abs_coef);
  f.label_ = std::move(label);
  return f;
}

EvolutionFamily EvolutionFamily::diagonal_sequence(MatrixFn coef, std::size_t dim,
                                                   VectorNorm norm,
                                                   std::string label) {
  if (!coef) throw std::invalid_argument("diagonal_sequence: null coefficient fn");
  if (dim == 0) throw std::invalid_argument("diagonal_sequence: dimension 0");
  EvolutionFamily f;
  f.kind_ = FamilyKind::Diagonal;
  f.dim_ = dim;
  f.norm_ = norm;
  f.matrix_ = std::move(coef);
  f.label_ = std::move(label);
  return f;
}

EvolutionFamily EvolutionFamily::dense_sequence(MatrixFn coef, std::size_t dim,
                                                VectorNorm norm,
                                                std::string label) {
  if (!coef) throw std::invalid_argument("dense_sequence: null coefficient fn");
  if (dim == 0) throw std::invalid_argument("dense_sequence: dimension 0");
  EvolutionFamily f;
  f.kind_ = FamilyKind::DenseSequence;
  f.dim_ = dim;
  f.norm_ = norm;
  f.matrix_ = std::move(coef);
  f.label_ = std::move(label);
  return f;
}

EvolutionFamily EvolutionFamily::closed_form(LogNormFn log_norm, VectorNorm norm,
                                             std::string label) {
  if (!log_norm) throw std::invalid_argument("closed_form: null callback");
  EvolutionFamily f;
  f.kind_ = FamilyKind::ClosedFormLogNorm;
  f.dim_ = 1;
  f.norm_ = norm;
  f.log_norm_ = std::move(log_norm);
  f.label_ = std::move(label);
  return f;
}

double EvolutionFamily::scalar_coef(index_t n) const {
  if (kind_ != FamilyKind::ScalarSequence)
    throw std::domain_error("scalar_coef: family is not a scalar sequence");
  const double c = scalar_(n);
  if (std::isnan(c) || std::isinf(c))
    throw std::runtime_error("scalar coefficient A(" + std::to_string(n) +
                             ") is not representable as a double; use the "
                             "log-domain operations");
  return c;
}

double EvolutionFamily::scalar_log_coef(index_t n) const {
  if (kind_ != FamilyKind::ScalarSequence)
    throw std::domain_error("scalar_log_coef: family is not a scalar sequence");
  const double lv = scalar_log_(n);
  if (std::isnan(lv) || lv == std::numeric_limits<double>::infinity())
    throw std::runtime_error("scalar coefficient log|A(" + std::to_string(n) +
                             ")| is not finite");
  return lv;
}

Matrix EvolutionFamily::matrix_coef(index_t n) const {
  if (kind_ == FamilyKind::ClosedFormLogNorm)
    throw std::domain_error(
        "matrix_coef: closed-form family has no coefficient representation");
  if (kind_ == FamilyKind::ScalarSequence) {
    Matrix m(1, 1);
    m(0, 0) = scalar_coef(n);
    return m;
  }
  Matrix m = matrix_(n);
  if (m.rows != dim_ || m.cols != dim_)
    throw std::runtime_error("coefficient A(" + std::to_string(n) +
                             ") has wrong dimensions");
  for (double v : m.a)
    if (std::isnan(v) || std::isinf(v))
      throw std::runtime_error("coefficient A(" + std::to_string(n) +
                               ") has non-finite entries");
  return m;
}

double EvolutionFamily::closed_form_log_norm(index_t m, index_t n) const {
  if (kind_ != FamilyKind::ClosedFormLogNorm)
    throw std::domain_error("closed_form_log_norm: family is not closed-form");
  if (m == n) return 0.0;
  return log_norm_(m, n);
}

}  // namespace expstab
