#include "expstab/envelope.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "expstab/detail/rng.hpp"

namespace expstab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
using detail::splitmix64;
}  // namespace

const char* to_string(StabilityKind k) {
  switch (k) {
    case StabilityKind::Ues: return "UES";
    case StabilityKind::Ses: return "SES";
    case StabilityKind::Es: return "ES";
    case StabilityKind::Nes: return "NES";
  }
  return "?";
}

StabilityEnvelope StabilityEnvelope::ues(double log_N, double alpha) {
  if (std::isnan(log_N) || log_N < 0.0)
    throw std::invalid_argument("envelope: N must be >= 1 (log N >= 0)");
  if (std::isnan(alpha) || alpha <= 0.0)
    throw std::invalid_argument("envelope: alpha must be > 0");
  StabilityEnvelope e;
  e.kind_ = StabilityKind::Ues;
  e.log_N_ = log_N;
  e.alpha_ = alpha;
  e.beta_ = 0.0;
  return e;
}

StabilityEnvelope StabilityEnvelope::ses(double log_N, double alpha, double beta) {
  if (std::isnan(log_N) || log_N < 0.0)
    throw std::invalid_argument("envelope: N must be >= 1 (log N >= 0)");
  if (std::isnan(alpha) || alpha <= 0.0)
    throw std::invalid_argument("envelope: alpha must be > 0");
  if (std::isnan(beta) || beta < 0.0 || beta >= alpha)
    throw std::invalid_argument("envelope: SES requires 0 <= beta < alpha");
  StabilityEnvelope e;
  e.kind_ = StabilityKind::Ses;
  e.log_N_ = log_N;
  e.alpha_ = alpha;
  e.beta_ = beta;
  return e;
}

StabilityEnvelope StabilityEnvelope::es(double log_N, double alpha, double beta) {
  if (std::isnan(log_N) || log_N < 0.0)
    throw std::invalid_argument("envelope: N must be >= 1 (log N >= 0)");
  if (std::isnan(alpha) || alpha <= 0.0)
    throw std::invalid_argument("envelope: alpha must be > 0");
  if (std::isnan(beta) || beta < 0.0)
    throw std::invalid_argument("envelope: ES requires beta >= 0");
  StabilityEnvelope e;
  e.kind_ = StabilityKind::Es;
  e.log_N_ = log_N;
  e.alpha_ = alpha;
  e.beta_ = beta;
  return e;
}

StabilityEnvelope StabilityEnvelope::nes(LogPrefactorFn log_N_fn, double alpha) {
  if (!log_N_fn) throw std::invalid_argument("envelope: null NES prefactor");
  if (std::isnan(alpha) || alpha <= 0.0)
    throw std::invalid_argument("envelope: alpha must be > 0");
  StabilityEnvelope e;
  e.kind_ = StabilityKind::Nes;
  e.alpha_ = alpha;
  e.log_N_fn_ = std::move(log_N_fn);
  return e;
}

double StabilityEnvelope::log_prefactor(index_t n) const {
  return kind_ == StabilityKind::Nes ? log_N_fn_(n) : log_N_;
}

double StabilityEnvelope::log_bound(index_t m, index_t n) const {
  const double gap = double(m - n);
  double b = log_prefactor(n) - alpha_ * gap;
  if (beta_ != 0.0) b += beta_ * double(n);
  return b;
}

namespace {

CertificateReport run_pair_check(const NormTable& table,
                                 const std::function<double(index_t, index_t)>& log_bound,
                                 const CertificateOptions& opts) {
  CertificateReport rep;
  rep.horizon = table.horizon();
  rep.tol = opts.tol;
  rep.margin = kInf;
  const index_t M = table.horizon();
  const index_t n_max = opts.n_limit == 0 ? M : std::min(opts.n_limit, M);
  for (index_t n = 0; n <= n_max; ++n) {
    for (index_t m = n + 1; m <= M; ++m) {
      ++rep.pairs_checked;
      const double e = table.entry_log(m, n);
      if (e == -kInf) continue;  // zero operator satisfies any bound
      const double margin = log_bound(m, n) - e;
      if (margin < rep.margin) {
        rep.margin = margin;
        rep.worst_m = m;
        rep.worst_n = n;
      }
    }
  }
  rep.pass = rep.margin >= -opts.tol;

  // Three-index spot check on seeded triples p <= n <= m:
  // entry(m,p) <= log bound(m,n) + entry(n,p).
  rep.triple_margin = kInf;
  std::uint64_t s = opts.seed;
  for (std::size_t t = 0; t < opts.spot_check_triples; ++t) {
    s = splitmix64(s);
    const index_t p = index_t(s % (n_max + 1));
    s = splitmix64(s);
    const index_t n = p + index_t(s % (n_max - p + 1));
    s = splitmix64(s);
    const index_t m = n + index_t(s % (M - n + 1));
    const double lhs = table.entry_log(m, p);
    if (lhs == -kInf) {
      ++rep.triples_checked;
      continue;
    }
    const double rhs = log_bound(m, n) + table.entry_log(n, p);
    const double margin = rhs - lhs;
    ++rep.triples_checked;
    if (margin < rep.triple_margin) rep.triple_margin = margin;
  }
  rep.triples_pass = rep.triple_margin >= -opts.tol;
  rep.pass = rep.pass && rep.triples_pass;
  return rep;
}

}  // namespace

CertificateReport check_envelope(const NormTable& table,
                                 const StabilityEnvelope& env,
                                 const CertificateOptions& opts) {
  if (env.kind() == StabilityKind::Nes) {
    // Sampled validity of the prefactor function over the table range.
    double prev = -kInf;
    for (index_t n = 0; n <= table.horizon(); ++n) {
      const double v = env.log_prefactor(n);
      if (std::isnan(v) || v < -opts.tol)
        throw std::invalid_argument("NES prefactor must satisfy N(n) >= 1");
      if (v < prev - opts.tol)
        throw std::invalid_argument("NES prefactor must be nondecreasing");
      prev = v;
    }
  }
  return run_pair_check(
      table, [&env](index_t m, index_t n) { return env.log_bound(m, n); }, opts);
}

CertificateReport check_linear_bound(const NormTable& table,
                                     const LinearLogBound& bound,
                                     const CertificateOptions& opts) {
  return run_pair_check(
      table,
      [&bound](index_t m, index_t n) {
        return bound.log_prefactor - bound.gap_coef * double(m - n) +
               bound.n_coef * double(n) + bound.m_coef * double(m);
      },
      opts);
}

double geometric_rate(double N, index_t k, double a_k) {
  if (!(N >= 1.0)) throw std::invalid_argument("geometric_rate: N >= 1 required");
  if (k < 1) throw std::invalid_argument("geometric_rate: k >= 1 required");
  if (!(a_k > 0.0)) throw std::invalid_argument("geometric_rate: a_k > 0 required");
  if (!(N * a_k < 1.0))
    throw std::invalid_argument(
        "geometric_rate: no rate derivable, N*a_k = " + std::to_string(N * a_k) +
        " is not < 1");
  return -std::log(N * a_k) / double(k);
}

StabilityEnvelope geometric_rate_envelope(double N, index_t k, double a_k) {
  const double alpha = geometric_rate(N, k, a_k);
  return StabilityEnvelope::ues(std::log(N) + alpha * double(k), alpha);
}

EsAlternateForms transform_es(double alpha, double beta) {
  if (!(alpha > 0.0)) throw std::invalid_argument("transform_es: alpha > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("transform_es: beta >= 0");
  EsAlternateForms f;
  f.nu = alpha + beta;
  f.beta = beta;
  f.delta = f.nu - beta;
  return f;
}

std::pair<double, double> transform_es_inverse(double nu, double beta) {
  if (!(nu > 0.0) || !(beta >= 0.0) || !(beta < nu))
    throw std::invalid_argument("transform_es_inverse: need 0 <= beta < nu");
  return {nu - beta, beta};
}

double transform_ses(double alpha, double beta) {
  if (!(alpha > 0.0)) throw std::invalid_argument("transform_ses: alpha > 0");
  if (!(beta >= 0.0) || !(beta < alpha))
    throw std::invalid_argument(
        "transform_ses: requires 0 <= beta < alpha (envelope is ES, not SES)");
  return alpha + beta;
}

double transform_ses_inverse(double alpha, double nu) {
  if (!(alpha > 0.0) || !(nu >= alpha) || !(nu < 2.0 * alpha))
    throw std::invalid_argument("transform_ses_inverse: need alpha <= nu < 2 alpha");
  return nu - alpha;
}

}  // namespace expstab
