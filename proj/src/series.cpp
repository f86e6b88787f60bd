#include "expstab/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "expstab/detail/rng.hpp"

namespace expstab {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

const char* to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Pass: return "pass";
    case SeriesVerdict::Fail: return "fail";
    case SeriesVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

SeriesReport datko_sum(const NormTable& table, double d, index_t n, index_t p,
                       const std::vector<double>& x, index_t horizon,
                       const SeriesBound& bound,
                       const std::optional<StabilityEnvelope>& tail_env) {
  if (d < 0.0) throw std::invalid_argument("datko_sum: weight d must be >= 0");
  if (p > n) throw std::invalid_argument("datko_sum: requires p <= n");
  if (horizon < n) throw std::invalid_argument("datko_sum: horizon < n");
  if (horizon > table.horizon())
    throw std::invalid_argument("datko_sum: horizon exceeds the table");
  const EvolutionFamily& fam = table.family();
  if (vector_norm(x, fam.norm()) == 0.0)
    throw std::invalid_argument("datko_sum: x must be nonzero");

  const std::vector<double> traj = trajectory_log_norms(fam, p, x, horizon);

  SeriesReport rep;
  rep.witness = {n, p, x};
  LogMagnitude sum = LogMagnitude::zero();
  for (index_t m = n; m <= horizon; ++m) {
    const double t = traj[m - p];
    if (t != kNegInf)
      sum += LogMagnitude::from_log(d * double(m - n) + t);
    ++rep.terms_used;
  }
  rep.partial_sum = sum;

  const double log_ref = bound.ref == SeriesBound::Ref::UnitX
                             ? std::log(vector_norm(x, fam.norm()))
                             : traj[n - p];
  rep.bound_checked =
      LogMagnitude::from_log(bound.log_coef + bound.weight * double(n) + log_ref);

  if (traj[horizon - p] == kNegInf) {
    // the trajectory is dead at the horizon, so every omitted term is an
    // image of the zero vector: the tail is exactly zero, no envelope needed
    rep.tail_bound = LogMagnitude::zero();
  } else if (tail_env) {
    const auto tail = series_tail_bound(*tail_env, d, n, horizon + 1 - n);
    if (tail) {
      // tail bounds sum e^{d(m-n)} ||A_m^n (A_n^p x)|| <= tail * ||A_n^p x||
      rep.tail_bound = *tail * LogMagnitude::from_log(traj[n - p]);
    } else {
      rep.tail_unbounded = true;
    }
  }

  if (rep.partial_sum > rep.bound_checked)
    rep.verdict = SeriesVerdict::Fail;
  else if (rep.tail_bound &&
           rep.partial_sum + *rep.tail_bound <= rep.bound_checked)
    rep.verdict = SeriesVerdict::Pass;
  else
    rep.verdict = SeriesVerdict::Inconclusive;
  return rep;
}

SeriesReport datko_check_uniform(const NormTable& table,
                                 const std::vector<std::vector<double>>& probes,
                                 index_t horizon, double divergence_tol) {
  if (probes.empty())
    throw std::invalid_argument("datko_check_uniform: probe set is empty");
  if (horizon > table.horizon())
    throw std::invalid_argument("datko_check_uniform: horizon exceeds the table");
  const EvolutionFamily& fam = table.family();
  const index_t half = horizon / 2;

  SeriesReport rep;
  LogMagnitude sup_full = LogMagnitude::zero();
  LogMagnitude sup_half = LogMagnitude::zero();
  for (const auto& x : probes) {
    const double nx = vector_norm(x, fam.norm());
    if (nx == 0.0)
      throw std::invalid_argument("datko_check_uniform: zero probe");
    const double log_nx = std::log(nx);
    for (index_t n = 0; n <= half; ++n) {
      const std::vector<double> traj = trajectory_log_norms(fam, n, x, horizon);
      LogMagnitude s = LogMagnitude::zero();
      for (index_t m = n; m <= horizon; ++m) {
        const double t = traj[m - n];
        if (t != kNegInf) s += LogMagnitude::from_log(t);
        ++rep.terms_used;
        if (m == half && n <= horizon / 4) {
          const LogMagnitude ratio_half = s.scaled_exp(-log_nx);
          if (ratio_half > sup_half) sup_half = ratio_half;
        }
      }
      const LogMagnitude ratio = s.scaled_exp(-log_nx);
      if (ratio > sup_full) {
        sup_full = ratio;
        rep.witness = {n, n, x};
      }
    }
  }
  rep.partial_sum = sup_full;
  rep.empirical_constant = sup_full;
  rep.bound_checked = sup_half;
  rep.divergent =
      !sup_half.is_zero() &&
      sup_full.log() > sup_half.log() + std::log1p(divergence_tol);
  rep.verdict = rep.divergent ? SeriesVerdict::Fail : SeriesVerdict::Pass;
  return rep;
}

SeriesReport barbashin_sum(const NormTable& table, double b, index_t m,
                           index_t n_low, const std::vector<double>& xstar,
                           double weight_c, double log_B) {
  if (b < 0.0) throw std::invalid_argument("barbashin_sum: weight b must be >= 0");
  if (weight_c < 0.0)
    throw std::invalid_argument("barbashin_sum: weight c must be >= 0");
  if (n_low > m) throw std::invalid_argument("barbashin_sum: requires n_low <= m");
  if (m > table.horizon())
    throw std::invalid_argument("barbashin_sum: m exceeds the table");
  const EvolutionFamily& fam = table.family();
  const VectorNorm dual = dual_norm_of(fam.norm());
  const double nx = vector_norm(xstar, dual);
  if (nx == 0.0) throw std::invalid_argument("barbashin_sum: x* must be nonzero");

  const std::vector<double> traj = dual_trajectory_log_norms(fam, m, n_low, xstar);

  SeriesReport rep;
  rep.witness = {m, n_low, xstar};
  LogMagnitude sum = LogMagnitude::zero();
  for (index_t k = n_low; k <= m; ++k) {
    const double t = traj[k - n_low];
    if (t != kNegInf)
      sum += LogMagnitude::from_log(b * double(m - k) + t);
    ++rep.terms_used;
  }
  rep.partial_sum = sum;
  rep.tail_bound = LogMagnitude::zero();  // the sum is finite
  rep.bound_checked =
      LogMagnitude::from_log(log_B + weight_c * double(m) + std::log(nx));
  rep.verdict = rep.partial_sum <= rep.bound_checked ? SeriesVerdict::Pass
                                                     : SeriesVerdict::Fail;
  return rep;
}

SeriesReport barbashin_check_operator(const NormTable& table, double b,
                                      index_t horizon, double divergence_tol) {
  if (b < 0.0)
    throw std::invalid_argument("barbashin_check_operator: b must be >= 0");
  if (horizon > table.horizon())
    throw std::invalid_argument("barbashin_check_operator: horizon exceeds table");
  SeriesReport rep;
  LogMagnitude sup_full = LogMagnitude::zero();
  LogMagnitude sup_half = LogMagnitude::zero();
  const index_t half = horizon / 2;
  for (index_t m = 0; m <= horizon; ++m) {
    LogMagnitude s = LogMagnitude::zero();
    for (index_t k = 0; k <= m; ++k) {
      const double e = table.entry_log(m, k);
      if (e != kNegInf) s += LogMagnitude::from_log(b * double(m - k) + e);
      ++rep.terms_used;
    }
    if (s > sup_full) {
      sup_full = s;
      rep.witness.n = m;
    }
    if (m <= half && s > sup_half) sup_half = s;
  }
  rep.partial_sum = sup_full;
  rep.empirical_constant = sup_full;
  rep.bound_checked = sup_half;
  rep.divergent =
      !sup_half.is_zero() &&
      sup_full.log() > sup_half.log() + std::log1p(divergence_tol);
  rep.verdict = rep.divergent ? SeriesVerdict::Fail : SeriesVerdict::Pass;
  return rep;
}

double derive_datko_constant(double N, double alpha, double beta, double d) {
  if (!(N >= 1.0)) throw std::invalid_argument("derive_datko_constant: N >= 1");
  if (!(alpha > 0.0))
    throw std::invalid_argument("derive_datko_constant: alpha > 0");
  if (!(beta >= 0.0))
    throw std::invalid_argument("derive_datko_constant: beta >= 0");
  if (!(d > 0.0) || !(d < alpha))
    throw std::invalid_argument(
        "derive_datko_constant: requires 0 < d < alpha (series closure fails)");
  return 1.0 + N * std::exp(alpha) / (std::exp(alpha) - std::exp(d));
}

double derive_barbashin_constant(double N, double alpha, double beta, double b) {
  if (!(N >= 1.0))
    throw std::invalid_argument("derive_barbashin_constant: N >= 1");
  if (!(alpha > 0.0))
    throw std::invalid_argument("derive_barbashin_constant: alpha > 0");
  if (!(beta >= 0.0))
    throw std::invalid_argument("derive_barbashin_constant: beta >= 0");
  if (!(b > beta) || !(b < alpha + beta))
    throw std::invalid_argument(
        "derive_barbashin_constant: requires beta < b < alpha + beta");
  const double s = alpha + beta;
  // e^s can overflow for the huge-rate fits; work with the stable form
  // e^s / (e^s - e^b) = 1 / (1 - e^{b-s}).
  return 1.0 + N / (1.0 - std::exp(b - s));
}

std::optional<LogMagnitude> series_tail_bound(const StabilityEnvelope& env,
                                              double weight, index_t start_n,
                                              index_t cutoff_gap) {
  const double gap_rate = weight - env.alpha();
  if (!(gap_rate < 0.0)) return std::nullopt;  // geometric closure fails
  const double log_tail = env.log_prefactor(start_n) +
                          env.beta() * double(start_n) +
                          gap_rate * double(cutoff_gap) -
                          std::log1p(-std::exp(gap_rate));
  return LogMagnitude::from_log(log_tail);
}

std::vector<std::vector<double>> make_probes(std::size_t dim, VectorNorm norm,
                                             std::uint64_t seed,
                                             std::size_t extra) {
  if (dim == 0) throw std::invalid_argument("make_probes: dimension 0");
  std::vector<std::vector<double>> probes;
  if (dim == 1) {
    probes.push_back({1.0});  // exact for scalars
    return probes;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    probes.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < extra; ++r) {
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v[i] = 2.0 * detail::unit_double(seed, r, i) - 1.0;
    if (vector_norm(v, norm) == 0.0) v[0] = 1.0;
    normalize(v, norm);
    probes.push_back(std::move(v));
  }
  return probes;
}

}  // namespace expstab
