#pragma once

// envelope.hpp — stability envelopes N e^{-alpha(m-n)} e^{beta n} (with an
// n-dependent prefactor for the nonuniform class) and the certificate check
// that compares them against a NormTable pair by pair.
//
// Kinds and their parameter invariants:
//   UES  beta = 0                     (constants N >= 1, alpha > 0)
//   SES  0 <= beta < alpha
//   ES   beta >= 0
//   NES  prefactor is a nondecreasing function N(n) >= 1, given as log N(n)
//
// Prefactors are carried as logs throughout; the example family needs
// N(n) = e^{n+1} at n ~ 1000, which has no double representation.

#include <cstdint>
#include <functional>
#include <optional>

#include "expstab/evolution.hpp"

namespace expstab {

enum class StabilityKind { Ues, Ses, Es, Nes };

const char* to_string(StabilityKind k);

class StabilityEnvelope {
 public:
  using LogPrefactorFn = std::function<double(index_t)>;  // n -> log N(n)

  static StabilityEnvelope ues(double log_N, double alpha);
  static StabilityEnvelope ses(double log_N, double alpha, double beta);
  static StabilityEnvelope es(double log_N, double alpha, double beta);
  static StabilityEnvelope nes(LogPrefactorFn log_N_fn, double alpha);

  StabilityKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// log N for constant-prefactor kinds; log N(n) for NES.
  double log_prefactor(index_t n = 0) const;

  /// Right side of the certificate at a pair: log N(n) - alpha (m-n) + beta n.
  double log_bound(index_t m, index_t n) const;

 private:
  StabilityEnvelope() = default;
  StabilityKind kind_ = StabilityKind::Ues;
  double log_N_ = 0.0;
  double alpha_ = 1.0;
  double beta_ = 0.0;
  LogPrefactorFn log_N_fn_;
};

struct CertificateReport {
  bool pass = false;
  double margin = 0.0;  // min over pairs m > n of (log bound - entry); raw
  index_t worst_m = 0;
  index_t worst_n = 0;
  index_t horizon = 0;
  std::size_t pairs_checked = 0;
  double tol = 0.0;
  // Three-index spot check: entry(m,p) <= log bound(m,n) + entry(n,p) on
  // sampled triples p <= n <= m (the definition-level form via
  // submultiplicativity).
  std::size_t triples_checked = 0;
  double triple_margin = 0.0;
  bool triples_pass = true;
};

struct CertificateOptions {
  // Floating round-off slack for pass/fail: certificates that are exactly
  // tight (the example family is, at pairs (2q+1, 2q)) compute to +-1e-13.
  // Margins are reported raw.
  double tol = 1e-9;
  std::size_t spot_check_triples = 64;
  std::uint64_t seed = 1;
  // Restrict start indices n (and triple middles) to <= n_limit; 0 = no
  // limit. m always ranges up to the table horizon. classify() uses this to
  // confirm fitted parameters over the range they were fitted on.
  index_t n_limit = 0;
};

/// Pass iff entry(m,n) <= log N(n) - alpha (m-n) + beta n for every pair in
/// the table (within opts.tol); reports the worst strict pair and its margin.
/// Entries that are exactly zero (log -inf) satisfy any bound. For NES
/// envelopes the prefactor function is checked nondecreasing and >= 1 over
/// the table range (std::invalid_argument otherwise).
CertificateReport check_envelope(const NormTable& table,
                                 const StabilityEnvelope& env,
                                 const CertificateOptions& opts = {});

/// Generic linear-in-(gap, n, m) log bound:
///   entry(m,n) <= log_prefactor - gap_coef (m-n) + n_coef n + m_coef m.
/// The proposition forms are exact reparameterizations of the definition
/// form within this shape.
struct LinearLogBound {
  double log_prefactor = 0.0;
  double gap_coef = 0.0;
  double n_coef = 0.0;
  double m_coef = 0.0;
};

CertificateReport check_linear_bound(const NormTable& table,
                                     const LinearLogBound& bound,
                                     const CertificateOptions& opts = {});

/// Uniform rate from a single decay sample: alpha = -ln(N a_k) / k, defined
/// when N a_k < 1 (std::invalid_argument otherwise: no rate derivable).
double geometric_rate(double N, index_t k, double a_k);

/// The UES envelope the rate construction certifies: prefactor M = N e^{alpha k}
/// with alpha = geometric_rate(N, k, a_k). Valid for any family satisfying
/// ||A_{n+k}^n|| <= a_k for all n.
StabilityEnvelope geometric_rate_envelope(double N, index_t k, double a_k);

/// ES parameter transformations (exact reparameterizations):
///   definition form  (alpha, beta):  - alpha (m-n) + beta n
///   gap/m form       (nu, beta):     - nu (m-n) + beta m,   nu = alpha + beta
///   split form       (delta, nu):    - delta m + nu n,      delta = nu - beta
struct EsAlternateForms {
  double nu = 0.0;     // alpha + beta
  double beta = 0.0;   // unchanged
  double delta = 0.0;  // nu - beta = alpha
};

EsAlternateForms transform_es(double alpha, double beta);
/// Inverse of the gap/m form: (nu, beta) -> (alpha, beta).
std::pair<double, double> transform_es_inverse(double nu, double beta);

/// SES transformation: (alpha, beta) with 0 <= beta < alpha maps to
/// nu = alpha + beta with alpha <= nu < 2 alpha; the inverse recovers
/// beta = nu - alpha. beta >= alpha throws (the envelope is ES, not SES).
double transform_ses(double alpha, double beta);
double transform_ses_inverse(double alpha, double nu);

}  // namespace expstab
