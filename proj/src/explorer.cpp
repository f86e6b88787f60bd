#include "expstab/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "expstab/series.hpp"
#include "expstab/zoo.hpp"

namespace expstab {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

EvolutionFamily make_candidate(const std::string& generator, std::uint64_t seed,
                               std::size_t dim, double radius, VectorNorm norm) {
  if (generator == "dense") return zoo::random_family(seed, dim, radius, norm);
  if (generator == "triangular")
    // near-degenerate diagonals: contraction factors drifting toward 1
    return zoo::triangular_family(seed, dim, 0.9 * radius, 0.999, radius, norm);
  if (generator == "rotation-contraction")
    return zoo::rotation_contraction_family(seed, radius, norm);
  throw std::invalid_argument("explorer: unknown generator '" + generator + "'");
}

}  // namespace

std::pair<LogMagnitude, LogMagnitude> pointwise_barbashin_score(
    const EvolutionFamily& family, index_t horizon,
    const std::vector<std::vector<double>>& probes, double weight) {
  if (probes.empty())
    throw std::invalid_argument("pointwise_barbashin_score: no probes");
  const VectorNorm vn = family.norm();

  // Pointwise sums: for each probe, one forward trajectory per start k feeds
  // every accumulator acc[m], k ascending for determinism.
  LogMagnitude sup_pointwise = LogMagnitude::zero();
  for (const auto& x : probes) {
    const double nx = vector_norm(x, vn);
    if (nx == 0.0)
      throw std::invalid_argument("pointwise_barbashin_score: zero probe");
    const double log_nx = std::log(nx);
    std::vector<LogMagnitude> acc(horizon + 1, LogMagnitude::zero());
    for (index_t k = 0; k <= horizon; ++k) {
      const std::vector<double> traj = trajectory_log_norms(family, k, x, horizon);
      for (index_t m = k; m <= horizon; ++m) {
        const double t = traj[m - k];
        if (t != kNegInf)
          acc[m] += LogMagnitude::from_log(weight * double(m - k) + t);
      }
    }
    for (index_t m = 0; m <= horizon; ++m) {
      const LogMagnitude ratio = acc[m].scaled_exp(-log_nx);
      if (ratio > sup_pointwise) sup_pointwise = ratio;
    }
  }

  const NormTable table = build_norm_table(family, horizon);
  const SeriesReport op = barbashin_check_operator(table, weight, horizon);
  return {sup_pointwise, op.empirical_constant};
}

std::vector<CandidateRecord> search_counterexample(const ExplorerConfig& cfg,
                                                   bool* truncated) {
  if (truncated) *truncated = false;
  std::vector<CandidateRecord> records;
  std::size_t produced = 0;
  for (const std::string& gen : cfg.generators) {
    for (std::size_t dim : cfg.dimensions) {
      for (double radius : cfg.radii) {
        for (std::uint64_t s = 0; s < cfg.seed_count; ++s) {
          if (produced >= cfg.max_candidates) {
            if (truncated) *truncated = true;
            goto done;
          }
          const std::uint64_t seed = cfg.seed_base + s;
          const std::size_t d = gen == "rotation-contraction" ? 2 : dim;
          const EvolutionFamily fam =
              make_candidate(gen, seed, d, radius, cfg.norm);
          const auto probes =
              make_probes(d, cfg.norm, cfg.probe_seed, cfg.extra_probes);

          const auto [pw_h, op_h] =
              pointwise_barbashin_score(fam, cfg.horizon, probes, cfg.weight);
          const auto [pw_2h, op_2h] = pointwise_barbashin_score(
              fam, 2 * cfg.horizon, probes, cfg.weight);

          CandidateRecord rec;
          rec.generator = gen;
          rec.seed = seed;
          rec.dimension = d;
          rec.radius = radius;
          rec.horizon = 2 * cfg.horizon;
          rec.log_pointwise_B = pw_2h.log();
          rec.log_operator_B = op_2h.log();
          const double lt = std::log1p(cfg.doubling_tol);
          rec.pointwise_bounded = pw_2h.log() <= pw_h.log() + lt;
          rec.operator_bounded = op_2h.log() <= op_h.log() + lt;
          rec.log_score = rec.log_operator_B - rec.log_pointwise_B;

          EstimatorConfig est = cfg.estimator;
          est.min_horizon = std::min<index_t>(est.min_horizon, cfg.horizon);
          const ClassificationReport cls = classify(fam, 2 * cfg.horizon, est);
          rec.alpha_hat = cls.alpha_hat;

          records.push_back(std::move(rec));
          ++produced;
        }
      }
    }
  }
done:
  std::sort(records.begin(), records.end(),
            [](const CandidateRecord& a, const CandidateRecord& b) {
              if (a.pointwise_bounded != b.pointwise_bounded)
                return a.pointwise_bounded > b.pointwise_bounded;
              if (a.alpha_hat != b.alpha_hat) return a.alpha_hat < b.alpha_hat;
              if (a.log_score != b.log_score) return a.log_score > b.log_score;
              if (a.generator != b.generator) return a.generator < b.generator;
              return a.seed < b.seed;
            });
  return records;
}

}  // namespace expstab
