#include "expstab/zoo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "expstab/detail/rng.hpp"

namespace expstab::zoo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log a_n for the parity-split sequence: -n for even n, n+1 for odd n.
double log_a(index_t n) {
  return (n % 2 == 0) ? -double(n) : double(n) + 1.0;
}

}  // namespace

double unit_double(std::uint64_t seed, std::uint64_t n, std::uint64_t slot) {
  return detail::unit_double(seed, n, slot);
}

EvolutionFamily paper_example(double c, VectorNorm norm) {
  if (c < 0.0) throw std::invalid_argument("paper_example: c must be >= 0");
  // log channel stays exact at every n; the raw coefficient c*e^{n+1}
  // leaves double range around n = 709 and is only usable below that.
  const double lc = std::log(c);  // -inf for c = 0
  return EvolutionFamily::scalar_sequence_log(
      [lc](index_t n) { return lc == kNegInf ? kNegInf : lc + log_a(n); },
      [c](index_t n) { return c * std::exp(log_a(n)); }, norm,
      "paper-example(c=" + std::to_string(c) + ")");
}

LogMagnitude paper_example_log_norm(double c, index_t m, index_t n) {
  if (c < 0.0) throw std::invalid_argument("paper_example_log_norm: c >= 0");
  if (m < n) throw std::invalid_argument("paper_example_log_norm: m >= n");
  if (m == n) return LogMagnitude::one();
  if (c == 0.0) return LogMagnitude::zero();
  const bool m_even = (m % 2 == 0);
  const bool n_even = (n % 2 == 0);
  double log_amn;
  if (m_even && n_even)
    log_amn = 0.0;
  else if (m_even && !n_even)
    log_amn = -double(n) - 1.0;
  else if (!m_even && n_even)
    log_amn = double(m) + 1.0;
  else
    log_amn = double(m - n);
  return LogMagnitude::from_log(double(m - n) * std::log(c) + log_amn);
}

EvolutionFamily paper_example_closed_form(double c, VectorNorm norm) {
  if (c < 0.0) throw std::invalid_argument("paper_example_closed_form: c >= 0");
  return EvolutionFamily::closed_form(
      [c](index_t m, index_t n) { return paper_example_log_norm(c, m, n).log(); },
      norm, "paper-example-closed-form(c=" + std::to_string(c) + ")");
}

EvolutionFamily constant_scalar(double a, VectorNorm norm) {
  return EvolutionFamily::scalar_sequence([a](index_t) { return a; }, norm,
                                          "constant-scalar(" + std::to_string(a) + ")");
}

EvolutionFamily zero_family(std::size_t dim, VectorNorm norm) {
  if (dim == 1)
    return EvolutionFamily::scalar_sequence([](index_t) { return 0.0; }, norm,
                                            "zero");
  return EvolutionFamily::dense_sequence(
      [dim](index_t) { return Matrix(dim, dim); }, dim, norm, "zero");
}

EvolutionFamily identity_family(std::size_t dim, VectorNorm norm) {
  if (dim == 1)
    return EvolutionFamily::scalar_sequence([](index_t) { return 1.0; }, norm,
                                            "identity");
  return EvolutionFamily::dense_sequence(
      [dim](index_t) { return Matrix::identity(dim); }, dim, norm, "identity");
}

EvolutionFamily diagonal_family(std::vector<double> entries, VectorNorm norm) {
  if (entries.empty())
    throw std::invalid_argument("diagonal_family: no entries");
  const std::size_t dim = entries.size();
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = entries[i];
  return EvolutionFamily::diagonal_sequence([m](index_t) { return m; }, dim,
                                            norm, "diagonal");
}

EvolutionFamily dense_periodic(std::vector<Matrix> steps, bool periodic,
                               VectorNorm norm) {
  if (steps.empty())
    throw std::invalid_argument("dense_periodic: no matrices");
  const std::size_t dim = steps.front().rows;
  for (const Matrix& m : steps)
    if (m.rows != dim || m.cols != dim)
      throw std::invalid_argument(
          "dense_periodic: matrices must be square with a uniform dimension");
  auto coef = [steps = std::move(steps), periodic](index_t n) {
    const std::size_t len = steps.size();
    const std::size_t i = periodic ? (n % len) : std::min<std::size_t>(n, len - 1);
    return steps[i];
  };
  return EvolutionFamily::dense_sequence(std::move(coef), dim, norm,
                                         periodic ? "dense-periodic" : "dense-sequence");
}

EvolutionFamily random_family(std::uint64_t seed, std::size_t dim, double radius,
                              VectorNorm norm) {
  if (dim == 0) throw std::invalid_argument("random_family: dimension 0");
  if (!(radius > 0.0)) throw std::invalid_argument("random_family: radius > 0");
  auto coef = [seed, dim, radius](index_t n) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m(i, j) = radius * (2.0 * unit_double(seed, n, i * dim + j) - 1.0);
    return m;
  };
  return EvolutionFamily::dense_sequence(std::move(coef), dim, norm,
                                         "random(seed=" + std::to_string(seed) + ")");
}

EvolutionFamily random_scalar_family(std::uint64_t seed, double lo, double hi,
                                     VectorNorm norm) {
  if (!(lo <= hi)) throw std::invalid_argument("random_scalar_family: lo <= hi");
  auto coef = [seed, lo, hi](index_t n) {
    return lo + (hi - lo) * unit_double(seed, n, 0);
  };
  return EvolutionFamily::scalar_sequence(
      std::move(coef), norm, "random-scalar(seed=" + std::to_string(seed) + ")");
}

EvolutionFamily triangular_family(std::uint64_t seed, std::size_t dim,
                                  double diag_lo, double diag_hi, double radius,
                                  VectorNorm norm) {
  if (dim == 0) throw std::invalid_argument("triangular_family: dimension 0");
  auto coef = [=](index_t n) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, i) = diag_lo + (diag_hi - diag_lo) * unit_double(seed, n, i * dim + i);
      for (std::size_t j = i + 1; j < dim; ++j)
        m(i, j) = radius * (2.0 * unit_double(seed, n, i * dim + j) - 1.0);
    }
    return m;
  };
  return EvolutionFamily::dense_sequence(std::move(coef), dim, norm,
                                         "triangular(seed=" + std::to_string(seed) + ")");
}

EvolutionFamily rotation_contraction_family(std::uint64_t seed, double rho,
                                            VectorNorm norm) {
  auto coef = [seed, rho](index_t n) {
    const double theta = 2.0 * M_PI * unit_double(seed, n, 0);
    Matrix m(2, 2);
    m(0, 0) = rho * std::cos(theta);
    m(0, 1) = -rho * std::sin(theta);
    m(1, 0) = rho * std::sin(theta);
    m(1, 1) = rho * std::cos(theta);
    return m;
  };
  return EvolutionFamily::dense_sequence(
      std::move(coef), 2, norm,
      "rotation-contraction(seed=" + std::to_string(seed) + ")");
}

double oracle_compare(const EvolutionFamily& family,
                      const std::function<LogMagnitude(index_t, index_t)>& closed_form,
                      index_t horizon) {
  const NormTable table = build_norm_table(family, horizon);
  double worst = 0.0;
  for (index_t n = 0; n <= horizon; ++n) {
    for (index_t m = n; m <= horizon; ++m) {
      const double direct = table.entry_log(m, n);
      const double closed = closed_form(m, n).log();
      if (direct == kNegInf && closed == kNegInf) continue;
      const double diff = std::abs(direct - closed);
      if (!(diff <= worst)) worst = diff;  // NaN (inf-inf mismatch) -> inf
      if (std::isnan(diff)) return std::numeric_limits<double>::infinity();
    }
  }
  return worst;
}

}  // namespace expstab::zoo
