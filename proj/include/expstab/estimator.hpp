#pragma once

// estimator.hpp — decides the strongest stability class a NormTable is
// consistent with at its horizon.
//
// The stability definitions quantify existentially over (N, alpha, beta); at
// a finite horizon the toolkit decides them by exponent estimation in the log
// domain plus a confirming certificate:
//
//   1. alpha_hat: for each start index n <= M/2, take the windowed upper
//      envelope of entry(m, n) over the gap g = m - n (sliding max, window =
//      gap_floor, full windows only, gaps >= gap_floor) and fit a line by
//      least squares; alpha_hat = max(0, -max_n slope_n). The upper envelope
//      is what makes the estimate land on the binding branch when the log
//      norms oscillate between diverging parity lines (plain LS would average
//      slopes and misclassify).
//   2. K(n) = max over m in [n, M] of entry(m, n) + alpha (m - n), with
//      alpha = (1 - eps_alpha) alpha_hat shrunk so the max is attained inside
//      the table. K(n) >= 1 always (the m = n term).
//   3. beta_hat: least-squares slope of the running maximum of log K(n)
//      (prefactors are nondecreasing by definition) over n in
//      [ceil(F/4), F], F = M/2; the first quartile is dropped as start-up
//      transient.
//   4. superlinear flag: a line is fitted on the first quartile of the K
//      curve alone and extrapolated; the flag fires when the last-quartile
//      running max exceeds the extrapolation by more than superlinear_tol
//      plus the local fit error.
//   5. Verdict ladder (each guarded by alpha_hat > tol_alpha):
//      superlinear -> NES; beta_hat <= tol_beta -> UES;
//      beta_hat < alpha - tol_beta -> SES; else ES. Otherwise "none".
//      Verdicts are "consistent at horizon M", not asymptotic proofs.
//
// classify() additionally confirms the verdict with a check_envelope run
// using the fitted parameters (prefactor = exp(fit intercept + 2 fit error))
// and downgrades one level if the certificate fails.

#include <optional>
#include <vector>

#include "expstab/envelope.hpp"
#include "expstab/evolution.hpp"

namespace expstab {

struct EstimatorConfig {
  index_t min_horizon = 64;
  index_t gap_floor = 8;
  double eps_alpha = 1e-3;
  double tol_alpha = 1e-3;
  double tol_beta = 1e-2;
  double superlinear_tol = 1.0;
  // Verdicts whose decisive comparison sits within this margin of its
  // threshold carry a "boundary" flag.
  double boundary_tol = 1e-2;
  double cert_tol = 1e-9;
};

enum class StabilityClass { Ues, Ses, Es, Nes, None };

const char* to_string(StabilityClass c);
/// Classes implied by inclusion (UES -> SES -> ES -> NES).
std::vector<StabilityClass> implied_classes(StabilityClass c);

struct ClassificationReport {
  double alpha_hat = 0.0;   // +inf when no finite decaying data exists
  double alpha_used = 0.0;  // shrunk rate used for K
  double beta_hat = 0.0;
  double fit_intercept = 0.0;
  double fit_error = 0.0;        // max |residual| of the beta fit
  double early_fit_error = 0.0;  // first-quartile local fit error
  double late_excess = 0.0;      // last-quartile excess over the early fit
  bool superlinear = false;
  bool boundary = false;
  StabilityClass verdict = StabilityClass::None;
  std::vector<double> log_K;  // n -> log K(n), all n <= horizon
  index_t horizon = 0;
  // classify() only:
  bool certificate_checked = false;
  bool downgraded = false;
  CertificateReport certificate;
};

/// Errors: table horizon below config.min_horizon -> std::runtime_error
/// naming the required minimum.
ClassificationReport estimate_envelope(const NormTable& table,
                                       const EstimatorConfig& cfg = {});

/// build_norm_table + estimate_envelope + certificate confirmation.
ClassificationReport classify(const EvolutionFamily& family, index_t horizon,
                              const EstimatorConfig& cfg = {},
                              const NormTableOptions& table_opts = {});

}  // namespace expstab
