#pragma once

// explorer.hpp — empirical probe of the open question: does the pointwise
// start-index bound sum_{k=0}^m ||A_m^k x|| <= B ||x|| already force uniform
// exponential stability? The operator-norm version of the bound is a proved
// characterization; the pointwise version is conjectured. The explorer
// generates seeded families, measures both bounds, and ranks candidates whose
// pointwise constant stays bounded (under horizon doubling) while the
// classifier's decay rate is small. It reports evidence only; it never claims
// a counterexample.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "expstab/estimator.hpp"
#include "expstab/evolution.hpp"
#include "expstab/log_magnitude.hpp"

namespace expstab {

struct CandidateRecord {
  std::string generator;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  double radius = 0.0;
  index_t horizon = 0;
  double log_pointwise_B = 0.0;  // sup_m sup_x sum_k ||A_m^k x|| / ||x||
  double log_operator_B = 0.0;   // sup_m sum_k ||A_m^k||
  bool pointwise_bounded = false;  // doubling test H vs 2H
  bool operator_bounded = false;
  double alpha_hat = 0.0;  // classifier decay rate at 2H
  // log of operator_B / pointwise_B; large = pointwise bound much weaker
  // than the operator bound, the interesting regime.
  double log_score = 0.0;
};

struct ExplorerConfig {
  std::vector<std::string> generators{"dense", "triangular",
                                      "rotation-contraction"};
  std::vector<std::size_t> dimensions{2};
  std::vector<double> radii{0.5};
  std::uint64_t seed_count = 32;
  std::uint64_t seed_base = 1;
  index_t horizon = 96;  // doubling test evaluates at horizon and 2*horizon
  std::size_t top_k = 10;
  std::size_t max_candidates = 4096;  // resource cap
  double doubling_tol = 1e-3;
  /// Weight exponent b in e^{b(m-k)} for the pointwise sums; 0 is the
  /// conjectured uniform statement. Other stability classes of the same
  /// question can be probed by raising it.
  double weight = 0.0;
  VectorNorm norm = VectorNorm::L1;
  std::uint64_t probe_seed = 7;
  std::size_t extra_probes = 8;
  EstimatorConfig estimator{};
};

/// (pointwise, operator) suprema at the given horizon, both in log domain,
/// weighted by e^{weight * (m-k)}.
std::pair<LogMagnitude, LogMagnitude> pointwise_barbashin_score(
    const EvolutionFamily& family, index_t horizon,
    const std::vector<std::vector<double>>& probes, double weight = 0.0);

/// Deterministic sweep over generators x dimensions x radii x seeds; returns
/// all evaluated records ranked (bounded pointwise constant first, then
/// smaller alpha_hat, then larger score, then seed). Sets *truncated when the
/// configured grid exceeded max_candidates.
std::vector<CandidateRecord> search_counterexample(const ExplorerConfig& cfg,
                                                   bool* truncated = nullptr);

}  // namespace expstab
