#pragma once

// family.hpp — representations of the operator sequence A(n) of a
// time-varying linear discrete-time system x_{n+1} = A(n) x_n.
//
// Four kinds are supported:
//   ScalarSequence    A(n) = c_n (dimension 1), accessed as log|c_n| plus sign
//   Diagonal          A(n) a fixed/varying diagonal matrix
//   DenseSequence     A(n) a dense square matrix
//   ClosedFormLogNorm only log||A_m^n|| is known, as a callback (m,n) -> log;
//                     treated as dimension 1 for vector-level operations.
//
// Coefficient access must be total in n (defined for every n >= 0) and the
// dimension constant. Closed-form families are expected to satisfy
// log||A_m^p|| <= log||A_m^n|| + log||A_n^p|| on any triple; this is checked
// by tests, not enforced at construction.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "expstab/linalg.hpp"

namespace expstab {

using index_t = std::size_t;

enum class FamilyKind { ScalarSequence, Diagonal, DenseSequence, ClosedFormLogNorm };

const char* to_string(FamilyKind k);

class EvolutionFamily {
 public:
  using ScalarFn = std::function<double(index_t)>;             // n -> c_n
  using MatrixFn = std::function<Matrix(index_t)>;             // n -> A(n)
  using LogNormFn = std::function<double(index_t, index_t)>;   // (m,n) -> log||A_m^n||, m > n

  static EvolutionFamily scalar_sequence(ScalarFn coef, VectorNorm norm,
                                         std::string label = {});
  /// Scalar family given through log|c_n| (-inf encodes c_n = 0), for
  /// sequences whose raw coefficients overflow double (the parity-split
  /// exponential example reaches e^{710} by n = 709). The plain coefficient
  /// function serves compose/apply at indices where it is representable.
  static EvolutionFamily scalar_sequence_log(ScalarFn log_abs_coef,
                                             ScalarFn plain_coef, VectorNorm norm,
                                             std::string label = {});
  static EvolutionFamily diagonal_sequence(MatrixFn coef, std::size_t dim,
                                           VectorNorm norm, std::string label = {});
  static EvolutionFamily dense_sequence(MatrixFn coef, std::size_t dim,
                                        VectorNorm norm, std::string label = {});
  /// Family known only through its evolution log-norms. The callback is
  /// consulted for m > n; m = n is the identity (log 0) by construction.
  static EvolutionFamily closed_form(LogNormFn log_norm, VectorNorm norm,
                                     std::string label = {});

  FamilyKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  VectorNorm norm() const { return norm_; }
  const std::string& label() const { return label_; }

  bool has_coefficients() const { return kind_ != FamilyKind::ClosedFormLogNorm; }

  /// Scalar coefficient c_n (ScalarSequence only). May throw when the raw
  /// value is not representable; the log channel below is always total.
  double scalar_coef(index_t n) const;
  /// log|c_n| (ScalarSequence only); -inf for a zero coefficient.
  double scalar_log_coef(index_t n) const;
  /// Matrix coefficient A(n) (any kind with coefficients; scalars are 1x1).
  Matrix matrix_coef(index_t n) const;
  /// Closed-form callback (ClosedFormLogNorm only), m > n.
  double closed_form_log_norm(index_t m, index_t n) const;

 private:
  EvolutionFamily() = default;

  FamilyKind kind_ = FamilyKind::ScalarSequence;
  std::size_t dim_ = 1;
  VectorNorm norm_ = VectorNorm::L1;
  std::string label_;
  ScalarFn scalar_;
  ScalarFn scalar_log_;
  MatrixFn matrix_;
  LogNormFn log_norm_;
};

}  // namespace expstab
