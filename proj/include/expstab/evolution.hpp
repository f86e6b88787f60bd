#pragma once

// evolution.hpp — evolution operators A_m^n = A(m)...A(n+1) (identity at
// m = n), their log-norms, dual applications, and the NormTable that the
// certificate and series checks consume.
//
// Overflow policy: compose/apply return raw operators/vectors and may
// overflow for long horizons; log_norm, dual_applied_log_norm, the trajectory
// sweeps and NormTable work entirely in the log domain and are safe at any
// horizon the resource guard admits.

#include <cstddef>
#include <optional>
#include <vector>

#include "expstab/family.hpp"
#include "expstab/linalg.hpp"
#include "expstab/log_magnitude.hpp"

namespace expstab {

/// A_m^n as an explicit matrix (1x1 for scalar families).
/// Errors: m < n -> std::invalid_argument; closed-form family ->
/// std::domain_error (no coefficient representation).
Matrix compose(const EvolutionFamily& family, index_t m, index_t n);

/// A_m^n x by iterated application of A(n+1), ..., A(m); the product matrix
/// is never formed for dimension > 1.
std::vector<double> apply(const EvolutionFamily& family, index_t m, index_t n,
                          const std::vector<double>& x);

/// log ||A_m^n|| in the family's induced norm. Scalar families sum
/// log|c_j| in the log domain without forming the product; closed-form
/// families delegate to their callback.
LogMagnitude log_norm(const EvolutionFamily& family, index_t m, index_t n);

/// log ||(A_m^k)^* x*|| where the adjoint of a real matrix is its transpose
/// and x* is measured in the dual norm (l1 <-> linf, l2 <-> l2). Computed by
/// a reverse-order transpose sweep with log rescaling. Scalar families route
/// through log_norm (scalars are self-adjoint), which makes
/// dual_applied_log_norm(m, k, 1) == log_norm(m, k) bit-exact.
LogMagnitude dual_applied_log_norm(const EvolutionFamily& family, index_t m,
                                   index_t k, const std::vector<double>& xstar);

/// log ||A_m^p x|| for every m in [p, horizon], one overflow-safe forward
/// sweep. Requires a family with coefficients.
std::vector<double> trajectory_log_norms(const EvolutionFamily& family,
                                         index_t p, const std::vector<double>& x,
                                         index_t horizon);

/// log ||(A_m^k)^* x*|| for every k in [n_low, m], one overflow-safe reverse
/// sweep (index i of the result corresponds to k = n_low + i).
std::vector<double> dual_trajectory_log_norms(const EvolutionFamily& family,
                                              index_t m, index_t n_low,
                                              const std::vector<double>& xstar);

struct NormTableOptions {
  index_t max_horizon = 20000;
  // Dense (non-scalar, non-closed-form) tables materialize the full pair
  // triangle; refuse above this many bytes.
  std::size_t max_table_bytes = std::size_t{1} << 30;
};

/// Precomputed log ||A_m^n|| over all pairs 0 <= n <= m <= horizon.
/// Scalar families are stored as prefix sums (O(M) memory, O(1) lookup, exact
/// zero-coefficient bookkeeping); matrix families as a dense triangle filled
/// by per-start rescaled product sweeps; closed-form families evaluate their
/// callback on demand. entry(n, n) is exactly log 1 = 0 in every
/// representation.
class NormTable {
 public:
  index_t horizon() const { return horizon_; }
  const EvolutionFamily& family() const { return family_; }

  LogMagnitude entry(index_t m, index_t n) const {
    return LogMagnitude::from_log(entry_log(m, n));
  }
  double entry_log(index_t m, index_t n) const;

 private:
  friend NormTable build_norm_table(const EvolutionFamily&, index_t,
                                    const NormTableOptions&);
  enum class Repr { ScalarPrefix, DenseTriangle, Callback };

  NormTable(EvolutionFamily f, index_t horizon, Repr repr)
      : family_(std::move(f)), horizon_(horizon), repr_(repr) {}

  std::size_t tri_index(index_t m, index_t n) const {
    // row n holds entries m = n..horizon
    const index_t h = horizon_ + 1;
    return n * h - n * (n - 1) / 2 + (m - n);
  }

  EvolutionFamily family_;
  index_t horizon_ = 0;
  Repr repr_;
  std::vector<double> prefix_;       // ScalarPrefix: prefix sums of log|c_j|
  std::vector<index_t> zero_count_;  // ScalarPrefix: #{j <= k : c_j == 0}
  std::vector<double> triangle_;     // DenseTriangle
};

/// Errors: horizon over the cap or table over the byte budget ->
/// std::runtime_error with an explicit message.
NormTable build_norm_table(const EvolutionFamily& family, index_t horizon,
                           const NormTableOptions& opts = {});

}  // namespace expstab
