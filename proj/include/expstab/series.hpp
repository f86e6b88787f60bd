#pragma once

// series.hpp — Datko-type (forward, primal) and Barbashin-type (start-index,
// dual) series criteria with proof-derived constants and certified truncation
// tails.
//
// One weighted implementation covers the whole family of statements:
//   datko:      sum_{m=n}^{H} e^{d (m-n)} ||A_m^p x||   vs  D e^{c n} ||ref||
//   barbashin:  sum_{k=l}^{m} e^{b (m-k)} ||(A_m^k)* x*|| vs  B e^{c m} ||x*||
// with c = 0 recovering the uniform statements and the reference norm
// selecting between ||x|| and ||A_n^p x|| right sides.
//
// Sums are accumulated in ascending index order in the log domain (log-sum-
// exp with a running maximum), so results are reproducible and overflow-safe.
// Infinite upper limits are replaced by a horizon plus a geometric tail bound
// certified from a stability envelope; without an envelope the verdict is
// inconclusive, never a silent pass.

#include <optional>
#include <vector>

#include "expstab/envelope.hpp"
#include "expstab/evolution.hpp"
#include "expstab/log_magnitude.hpp"

namespace expstab {

enum class SeriesVerdict { Pass, Fail, Inconclusive };
const char* to_string(SeriesVerdict v);

struct SeriesWitness {
  index_t n = 0;  // start index (datko) / sum target m (barbashin)
  index_t p = 0;  // propagation origin (datko) / lower limit (barbashin)
  std::vector<double> probe;
};

struct SeriesReport {
  LogMagnitude partial_sum;
  std::size_t terms_used = 0;
  // Certified upper bound on the omitted tail; nullopt when the geometric
  // closure fails (weight >= rate) or no envelope was supplied.
  std::optional<LogMagnitude> tail_bound;
  bool tail_unbounded = false;
  LogMagnitude bound_checked;
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  SeriesWitness witness;
  // For the sup-style checks: the measured constant and the doubling flag.
  LogMagnitude empirical_constant;
  bool divergent = false;
};

struct SeriesBound {
  double log_coef = 0.0;  // log D (or log N(n), log B)
  double weight = 0.0;    // c in e^{c n} / e^{c m}; 0 recovers uniform bounds
  enum class Ref { UnitX, PropagatedX } ref = Ref::PropagatedX;
};

/// sum_{m=n}^{horizon} e^{d(m-n)} ||A_m^p x|| against
/// bound.log_coef + c*n + log||ref|| (ref: ||x|| or ||A_n^p x||).
/// Preconditions: p <= n <= horizon <= table horizon, d >= 0, x nonzero.
/// Verdict: Fail when the partial sum alone exceeds the bound; Pass when
/// partial + tail fits under it; Inconclusive otherwise.
SeriesReport datko_sum(const NormTable& table, double d, index_t n, index_t p,
                       const std::vector<double>& x, index_t horizon,
                       const SeriesBound& bound,
                       const std::optional<StabilityEnvelope>& tail_env = {});

/// sup over starts n <= horizon/2 and probes x of
/// (sum_{m=n}^{horizon} ||A_m^n x||) / ||x||, with divergence flagged by
/// comparing against the same sup at half the horizon.
SeriesReport datko_check_uniform(const NormTable& table,
                                 const std::vector<std::vector<double>>& probes,
                                 index_t horizon, double divergence_tol = 1e-3);

/// sum_{k=n_low}^{m} e^{b(m-k)} ||(A_m^k)* x*|| against
/// log_B + c*m + log||x*||. The sum is finite, so the verdict is never
/// inconclusive. Preconditions: n_low <= m <= table horizon, b >= 0,
/// weight_c >= 0, x* nonzero.
SeriesReport barbashin_sum(const NormTable& table, double b, index_t m,
                           index_t n_low, const std::vector<double>& xstar,
                           double weight_c, double log_B);

/// sup over m <= horizon of sum_{k=0}^{m} e^{b(m-k)} ||A_m^k|| (operator
/// norms straight from the table), with the doubling divergence flag.
SeriesReport barbashin_check_operator(const NormTable& table, double b,
                                      index_t horizon,
                                      double divergence_tol = 1e-3);

/// D = 1 + N e^alpha / (e^alpha - e^d); the constant the necessity proofs
/// pair with weight c = beta. Requires 0 < d < alpha.
double derive_datko_constant(double N, double alpha, double beta, double d);

/// B = 1 + N e^{alpha+beta} / (e^{alpha+beta} - e^b); requires
/// beta < b < alpha + beta.
double derive_barbashin_constant(double N, double alpha, double beta, double b);

/// Geometric tail closure: N(n) e^{beta n} e^{(weight - alpha) cutoff_gap} /
/// (1 - e^{weight - alpha}); nullopt when weight >= alpha ("unbounded").
std::optional<LogMagnitude> series_tail_bound(const StabilityEnvelope& env,
                                              double weight, index_t start_n,
                                              index_t cutoff_gap);

/// Probe set for the "for all x" quantifiers: the canonical basis plus
/// `extra` seeded unit vectors in the given norm; dimension 1 yields the
/// single exact probe {1}.
std::vector<std::vector<double>> make_probes(std::size_t dim, VectorNorm norm,
                                             std::uint64_t seed,
                                             std::size_t extra = 8);

}  // namespace expstab
