#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "expstab/estimator.hpp"
#include "expstab/series.hpp"
#include "expstab/zoo.hpp"

using namespace expstab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Brute-force weighted sum in plain doubles (valid while terms stay in range).
double brute_datko(const EvolutionFamily& fam, double d, index_t n, index_t p,
                   double x, index_t horizon) {
  double sum = 0.0;
  for (index_t m = n; m <= horizon; ++m) {
    double prod = x;
    for (index_t j = p + 1; j <= m; ++j) prod *= fam.scalar_coef(j);
    sum += std::exp(d * double(m - n)) * std::abs(prod);
  }
  return sum;
}
}  // namespace

TEST_CASE("datko_sum: zero family keeps only the m = n term") {
  const auto table = build_norm_table(zoo::zero_family(), 64);
  SeriesBound bound;
  bound.log_coef = std::log(1.0);
  const auto env = StabilityEnvelope::ues(0.0, 1.0);
  const auto rep = datko_sum(table, 0.7, 5, 5, {1.0}, 64, bound, env);
  CHECK(rep.partial_sum.log() == doctest::Approx(0.0));  // = ||x||
  CHECK(rep.verdict == SeriesVerdict::Pass);             // any D >= 1 works
}

TEST_CASE("datko_sum: geometric series for the constant contraction") {
  const auto fam = zoo::constant_scalar(std::exp(-1.0));
  const auto table = build_norm_table(fam, 400);
  SeriesBound bound;
  bound.log_coef = std::log(derive_datko_constant(1.0, 1.0, 0.0, 0.5));
  const auto env = StabilityEnvelope::ues(0.0, 1.0);
  for (index_t n : {0u, 17u, 100u}) {
    const auto rep = datko_sum(table, 0.5, n, n, {1.0}, 400, bound, env);
    // sum_{g>=0} e^{-g/2} = 1/(1 - e^{-1/2})
    CHECK(rep.partial_sum.value() ==
          doctest::Approx(2.541494083268874).epsilon(1e-9));
    CHECK(rep.verdict == SeriesVerdict::Pass);
    CHECK(rep.tail_bound);
    CHECK(rep.partial_sum.value() + rep.tail_bound->value() <=
          rep.bound_checked.value());
  }
}

TEST_CASE("datko_sum: example family unweighted sum matches brute force") {
  const auto fam = zoo::paper_example(0.1);
  const auto table = build_norm_table(fam, 300);
  SeriesBound bound;
  bound.log_coef = std::log(10.0);
  const auto rep = datko_sum(table, 0.0, 0, 0, {1.0}, 300, bound, std::nullopt);
  const double brute = brute_datko(fam, 0.0, 0, 0, 1.0, 300);
  CHECK(rep.partial_sum.value() == doctest::Approx(brute).epsilon(1e-9));
  // geometric closed form: 1 + c^2/(1-c^2) + c e^2/(1 - c^2 e^2), c = 0.1
  const double c = 0.1, e2 = std::exp(2.0);
  const double closed =
      1.0 + (c * c) / (1.0 - c * c) + (c * e2) / (1.0 - c * c * e2);
  CHECK(rep.partial_sum.value() == doctest::Approx(closed).epsilon(1e-9));
  CHECK(rep.partial_sum.value() == doctest::Approx(1.80796).epsilon(1e-4));
}

TEST_CASE("datko_sum: propagated start p < n") {
  const auto fam = zoo::constant_scalar(0.5);
  const auto table = build_norm_table(fam, 128);
  SeriesBound bound;
  bound.log_coef = std::log(2.5);
  bound.ref = SeriesBound::Ref::PropagatedX;
  const auto env = StabilityEnvelope::ues(0.0, std::log(2.0));
  const auto rep = datko_sum(table, 0.0, 10, 4, {8.0}, 128, bound, env);
  // ||A_n^p x|| = 0.5^6 * 8; sum = ||A_n^p x|| * (2 - 2^-118)
  const double ref = std::pow(0.5, 6) * 8.0;
  CHECK(rep.partial_sum.value() == doctest::Approx(2.0 * ref).epsilon(1e-9));
  CHECK(rep.bound_checked.value() == doctest::Approx(2.5 * ref).epsilon(1e-12));
  CHECK(rep.verdict == SeriesVerdict::Pass);
}

TEST_CASE("datko_sum: contract errors") {
  const auto table = build_norm_table(zoo::constant_scalar(0.5), 32);
  SeriesBound bound;
  CHECK_THROWS_AS(datko_sum(table, -0.1, 0, 0, {1.0}, 32, bound, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(datko_sum(table, 0.1, 2, 5, {1.0}, 32, bound, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(datko_sum(table, 0.1, 0, 0, {0.0}, 32, bound, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(datko_sum(table, 0.1, 0, 0, {1.0}, 64, bound, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("datko_sum: no envelope means no silent pass") {
  const auto table = build_norm_table(zoo::constant_scalar(0.5), 64);
  SeriesBound bound;
  bound.log_coef = std::log(100.0);  // would pass easily with a tail
  const auto rep = datko_sum(table, 0.1, 0, 0, {1.0}, 64, bound, std::nullopt);
  CHECK(rep.verdict == SeriesVerdict::Inconclusive);
  CHECK_FALSE(rep.tail_bound);
  // a partial sum already over the bound is a definitive fail
  SeriesBound tight;
  tight.log_coef = std::log(1.0);
  const auto fail =
      datko_sum(build_norm_table(zoo::identity_family(), 64), 0.0, 0, 0, {1.0},
                64, tight, std::nullopt);
  CHECK(fail.verdict == SeriesVerdict::Fail);
}

TEST_CASE("datko_sum: weight at the rate makes the tail unbounded") {
  const auto table = build_norm_table(zoo::constant_scalar(std::exp(-1.0)), 64);
  SeriesBound bound;
  bound.log_coef = std::log(1e9);
  const auto env = StabilityEnvelope::ues(0.0, 1.0);
  const auto rep = datko_sum(table, 1.0, 0, 0, {1.0}, 64, bound, env);
  CHECK(rep.tail_unbounded);
  CHECK(rep.verdict == SeriesVerdict::Inconclusive);
}

TEST_CASE("datko_check_uniform: bounded for contractions, divergent otherwise") {
  const auto probes1 = make_probes(1, VectorNorm::L1, 3);
  {
    const auto table = build_norm_table(zoo::constant_scalar(0.5), 400);
    const auto rep = datko_check_uniform(table, probes1, 400);
    CHECK(rep.verdict == SeriesVerdict::Pass);
    CHECK_FALSE(rep.divergent);
    CHECK(rep.empirical_constant.value() == doctest::Approx(2.0).epsilon(1e-6));
  }
  {
    // per-start sums grow like e^{n+1}: the sup must diverge with the horizon
    const auto table = build_norm_table(zoo::paper_example(0.2), 400);
    const auto rep = datko_check_uniform(table, probes1, 400);
    CHECK(rep.divergent);
    CHECK(rep.verdict == SeriesVerdict::Fail);
  }
  {
    const auto table = build_norm_table(zoo::identity_family(), 128);
    const auto rep = datko_check_uniform(table, probes1, 128);
    CHECK(rep.divergent);
    // partial sums are horizon - n + 1
    CHECK(rep.empirical_constant.value() == doctest::Approx(129.0).epsilon(1e-12));
  }
}

TEST_CASE("barbashin_sum: single term, direct products, parity family") {
  const auto half = build_norm_table(zoo::constant_scalar(0.5), 64);
  // m = n_low: only the identity term ||x*||
  const auto trivial = barbashin_sum(half, 0.0, 7, 7, {3.0}, 0.0, std::log(1.0));
  CHECK(trivial.partial_sum.value() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(trivial.verdict == SeriesVerdict::Pass);
  // 1 + 0.5 + 0.25 + 0.125
  const auto rep = barbashin_sum(half, 0.0, 3, 0, {1.0}, 0.0, std::log(2.0));
  CHECK(rep.partial_sum.value() == doctest::Approx(1.875).epsilon(1e-12));
  CHECK(rep.verdict == SeriesVerdict::Pass);

  // weighted example-family sum against a brute-force double loop
  const auto fam = zoo::paper_example(0.1);
  const auto table = build_norm_table(fam, 16);
  const auto wrep = barbashin_sum(table, 1.0, 4, 0, {1.0}, 0.0, std::log(1e9));
  double brute = 0.0;
  for (index_t k = 0; k <= 4; ++k) {
    double prod = 1.0;
    for (index_t j = k + 1; j <= 4; ++j) prod *= fam.scalar_coef(j);
    brute += std::exp(1.0 * double(4 - k)) * std::abs(prod);
  }
  CHECK(wrep.partial_sum.value() == doctest::Approx(brute).epsilon(1e-9));
}

TEST_CASE("barbashin_sum: scalar self-adjointness is bit-exact") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto fam = zoo::random_scalar_family(seed, 0.1, 1.3);
    const auto table = build_norm_table(fam, 48);
    const index_t m = 37, n_low = 2;
    const double b = 0.25;
    const auto rep = barbashin_sum(table, b, m, n_low, {1.0}, 0.0, 100.0);
    // primal weighted sum, same order, same accumulation
    LogMagnitude primal = LogMagnitude::zero();
    for (index_t k = n_low; k <= m; ++k)
      primal += log_norm(fam, m, k).scaled_exp(b * double(m - k));
    CHECK(rep.partial_sum == primal);  // exact, not approximate
  }
}

TEST_CASE("barbashin_sum: contract errors") {
  const auto table = build_norm_table(zoo::constant_scalar(0.5), 32);
  CHECK_THROWS_AS(barbashin_sum(table, -0.1, 4, 0, {1.0}, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(barbashin_sum(table, 0.1, 4, 0, {1.0}, -0.5, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(barbashin_sum(table, 0.1, 4, 5, {1.0}, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(barbashin_sum(table, 0.1, 4, 0, {0.0}, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(barbashin_sum(table, 0.1, 64, 0, {1.0}, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("barbashin_check_operator: geometric, zero, and divergent families") {
  {
    const auto table = build_norm_table(zoo::constant_scalar(0.5), 400);
    const auto rep = barbashin_check_operator(table, 0.0, 400);
    CHECK(rep.empirical_constant.value() == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_FALSE(rep.divergent);
  }
  {
    const auto table = build_norm_table(zoo::zero_family(), 64);
    const auto rep = barbashin_check_operator(table, 0.8, 64);
    // every m contributes exactly the k = m identity term
    CHECK(rep.empirical_constant.value() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(rep.divergent);
  }
  {
    // k = 0 terms c^m e^{m+1} blow up at odd m for c = 0.2
    const auto table = build_norm_table(zoo::paper_example(0.2), 256);
    const auto rep = barbashin_check_operator(table, 0.0, 256);
    CHECK(rep.divergent);
    CHECK(rep.verdict == SeriesVerdict::Fail);
  }
}

TEST_CASE("derived constants: values, poles, and parameter checks") {
  const double D = derive_datko_constant(1.0, 1.0, 0.0, 0.5);
  // two algebraic routes to the same closed form
  CHECK(D == doctest::Approx(1.0 + std::exp(1.0) /
                                       (std::exp(1.0) - std::exp(0.5)))
                 .epsilon(1e-12));
  CHECK(D == doctest::Approx(1.0 + 1.0 / (1.0 - std::exp(-0.5))).epsilon(1e-12));
  CHECK(D == doctest::Approx(3.5414940825).epsilon(1e-9));
  CHECK(derive_datko_constant(1.0, 1.0, 0.0, 1e-9) ==
        doctest::Approx(1.0 + std::exp(1.0) / (std::exp(1.0) - 1.0)).epsilon(1e-6));
  CHECK(derive_datko_constant(1.0, 1.0, 0.0, 1e-9) ==
        doctest::Approx(2.5819767).epsilon(1e-6));
  CHECK_THROWS_AS(derive_datko_constant(1.0, 1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(derive_datko_constant(1.0, 1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(derive_datko_constant(0.5, 1.0, 0.0, 0.5), std::invalid_argument);

  // beta = 0 collapses the dual constant onto the primal one
  CHECK(derive_barbashin_constant(1.0, 1.0, 0.0, 0.5) ==
        doctest::Approx(D).epsilon(1e-12));
  // example-family parameters at c = 0.1: N = e, alpha = -ln(ce), beta = 1
  const double alpha = -std::log(0.1 * std::exp(1.0));
  const double B = derive_barbashin_constant(std::exp(1.0), alpha, 1.0, 1.5);
  const double s = alpha + 1.0;
  CHECK(B == doctest::Approx(1.0 + std::exp(1.0) * std::exp(s) /
                                       (std::exp(s) - std::exp(1.5)))
                 .epsilon(1e-12));
  CHECK_THROWS_AS(derive_barbashin_constant(1.0, 1.0, 1.0, 1.0),
                  std::invalid_argument);  // b = beta
  CHECK_THROWS_AS(derive_barbashin_constant(1.0, 1.0, 1.0, 2.0),
                  std::invalid_argument);  // b = alpha + beta
}

TEST_CASE("derived dual constant certifies the example family") {
  // necessity direction: the envelope (e, alpha, 1) holds for c = 0.1, so the
  // derived B with c-weight beta must pass at every m.
  const double alpha = -std::log(0.1 * std::exp(1.0));
  const double B = derive_barbashin_constant(std::exp(1.0), alpha, 1.0, 1.5);
  const auto table = build_norm_table(zoo::paper_example(0.1), 200);
  for (index_t m : {17u, 64u, 200u}) {
    const auto rep =
        barbashin_sum(table, 1.5, m, 0, {1.0}, 1.0, std::log(B));
    CHECK(rep.verdict == SeriesVerdict::Pass);
  }
}

TEST_CASE("tail bound: closed form, vanishing limit, unbounded pole") {
  const auto env = StabilityEnvelope::ues(0.0, 1.0);
  const auto t = series_tail_bound(env, 0.0, 5, 20);
  REQUIRE(t);
  CHECK(t->log() ==
        doctest::Approx(-20.0 - std::log(1.0 - std::exp(-1.0))).epsilon(1e-12));
  const auto far = series_tail_bound(env, 0.0, 5, 4000);
  REQUIRE(far);
  CHECK(far->log() < -3000.0);
  CHECK_FALSE(series_tail_bound(env, 1.0, 5, 20));  // weight = rate
  // nonuniform prefactor enters through the start index
  const auto nes = StabilityEnvelope::nes(
      [](index_t n) { return double(n) + 1.0; }, 2.0);
  const auto tn = series_tail_bound(nes, 0.5, 7, 10);
  REQUIRE(tn);
  CHECK(tn->log() == doctest::Approx(8.0 - 1.5 * 10.0 -
                                     std::log1p(-std::exp(-1.5)))
                         .epsilon(1e-12));
}

TEST_CASE("necessity: a verified envelope makes the derived-D series pass") {
  // l1 basis probes attain the l1 operator norm, so the probe check covers
  // the full quantifier for this norm.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto fam = zoo::random_family(seed, 2, 0.4, VectorNorm::L1);
    const auto table = build_norm_table(fam, 128);
    const auto rep = estimate_envelope(table);
    REQUIRE(rep.verdict == StabilityClass::Ues);
    const double alpha = rep.alpha_used;
    // sup-based prefactor: holds by construction
    double log_N = 0.0;
    for (index_t n = 0; n <= 128; ++n)
      for (index_t m = n + 1; m <= 128; ++m)
        log_N = std::max(log_N, table.entry_log(m, n) + alpha * double(m - n));
    const auto env = StabilityEnvelope::ues(log_N + 1e-9, alpha);
    REQUIRE(check_envelope(table, env).pass);
    const double d = alpha / 2.0;
    const double D =
        derive_datko_constant(std::exp(env.log_prefactor()), alpha, 0.0, d);
    SeriesBound bound;
    bound.log_coef = std::log(D);
    for (const auto& x : make_probes(2, VectorNorm::L1, 5)) {
      for (index_t n = 0; n <= 64; n += 16) {
        const auto srep = datko_sum(table, d, n, n, x, 128, bound, env);
        CHECK(srep.verdict == SeriesVerdict::Pass);
      }
    }
  }
}

TEST_CASE("sufficiency: a passing series bound implies the matching envelope") {
  for (std::uint64_t seed = 21; seed <= 26; ++seed) {
    const auto fam = zoo::random_family(seed, 2, 0.4, VectorNorm::L1);
    const auto table = build_norm_table(fam, 128);
    const double d = 0.2, c = 0.05;
    // find the empirical D over basis probes (l1: basis attains the norm)
    double log_D = -kInf;
    for (const auto& x : make_probes(2, VectorNorm::L1, 5, 0)) {
      for (index_t n = 0; n <= 128; ++n) {
        const auto traj = trajectory_log_norms(fam, n, x, 128);
        LogMagnitude s = LogMagnitude::zero();
        for (index_t m = n; m <= 128; ++m)
          if (traj[m - n] != -kInf)
            s += LogMagnitude::from_log(d * double(m - n) + traj[m - n]);
        log_D = std::max(log_D, s.log() - c * double(n));
      }
    }
    // every term of a passing series satisfies the pointwise bound, so the
    // (N = D, alpha = d, beta = c) envelope must pass on the same table
    const auto env = StabilityEnvelope::es(log_D + 1e-9, d, c);
    const auto rep = check_envelope(table, env);
    CHECK(rep.pass);
  }
}

TEST_CASE("dual chain device: pointwise bound propagates through the sum") {
  for (std::uint64_t seed = 31; seed <= 36; ++seed) {
    const auto fam = zoo::random_family(seed, 3, 0.5, VectorNorm::L1);
    const index_t m = 40, n = 8;
    const auto table = build_norm_table(fam, m);
    double log_B = 0.0;  // sup_k ||A_k^n|| over n <= k <= m
    for (index_t k = n; k <= m; ++k)
      log_B = std::max(log_B, table.entry_log(k, n));
    for (const auto& xs : make_probes(3, VectorNorm::Linf, 9)) {
      const auto traj = dual_trajectory_log_norms(fam, m, n, xs);
      LogMagnitude sum = LogMagnitude::zero();
      for (index_t k = n; k <= m; ++k)
        if (traj[k - n] != -kInf)
          sum += LogMagnitude::from_log(traj[k - n]);
      const double lhs =
          std::log(double(m - n + 1)) + dual_applied_log_norm(fam, m, n, xs).log();
      CHECK(lhs <= log_B + sum.log() + 1e-9);
    }
  }
}

TEST_CASE("truncation soundness: certified totals dominate longer partials") {
  const auto fam = zoo::paper_example(0.1);
  const auto table = build_norm_table(fam, 400);
  const double alpha = -std::log(0.1 * std::exp(1.0));
  const auto env = StabilityEnvelope::es(1.0, alpha, 1.0);
  SeriesBound bound;
  bound.log_coef = std::log(1e6);
  const double d = 0.3;
  double prev_total = kInf;
  for (index_t h : {50u, 100u, 200u, 400u}) {
    const auto rep = datko_sum(table, d, 4, 4, {1.0}, h, bound, env);
    REQUIRE(rep.tail_bound);
    const double total = (rep.partial_sum + *rep.tail_bound).log();
    CHECK(total <= prev_total + 1e-12);
    prev_total = total;
    // and the certified total dominates any longer partial sum
    const auto longer = datko_sum(table, d, 4, 4, {1.0}, 400, bound, env);
    CHECK(longer.partial_sum.log() <= total + 1e-12);
  }
}

TEST_CASE("probe sets: exact scalar probe, basis plus seeded unit vectors") {
  const auto scalar = make_probes(1, VectorNorm::L2, 1);
  REQUIRE(scalar.size() == 1);
  CHECK(scalar[0] == std::vector<double>{1.0});
  const auto probes = make_probes(3, VectorNorm::L2, 1, 8);
  CHECK(probes.size() == 11);
  for (std::size_t i = 0; i < 3; ++i) CHECK(probes[i][i] == 1.0);
  for (std::size_t i = 3; i < probes.size(); ++i)
    CHECK(vector_norm(probes[i], VectorNorm::L2) == doctest::Approx(1.0));
  // deterministic
  CHECK(make_probes(3, VectorNorm::L2, 1, 8) == probes);
}
