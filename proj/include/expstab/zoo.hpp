#pragma once

// zoo.hpp — reference families: the parity-split exponential example family
// A(n) = c*a_n (a_n = e^{-n} for even n, e^{n+1} for odd n), its closed-form
// evolution log-norms, standard constant/diagonal/random families, and the
// brute-force comparison oracle.

#include <cstdint>
#include <functional>
#include <vector>

#include "expstab/evolution.hpp"
#include "expstab/family.hpp"

namespace expstab::zoo {

/// Scalar family A(n) = c * a_n with a_n = e^{-n} (n even), e^{n+1} (n odd).
/// c >= 0; c = 0 gives the zero family. Throws std::invalid_argument for
/// c < 0.
EvolutionFamily paper_example(double c, VectorNorm norm = VectorNorm::L1);

/// Closed form of log ||A_m^n|| for the same family:
/// (m-n)*log c + log a_{mn}, where log a_{mn} is 0 / -n-1 / m+1 / m-n by the
/// parities of (m, n); m == n returns 0 (identity) and takes precedence.
LogMagnitude paper_example_log_norm(double c, index_t m, index_t n);

/// The closed form wrapped as a ClosedFormLogNorm family.
EvolutionFamily paper_example_closed_form(double c,
                                          VectorNorm norm = VectorNorm::L1);

EvolutionFamily constant_scalar(double a, VectorNorm norm = VectorNorm::L1);
EvolutionFamily zero_family(std::size_t dim = 1, VectorNorm norm = VectorNorm::L1);
EvolutionFamily identity_family(std::size_t dim = 1,
                                VectorNorm norm = VectorNorm::L1);
/// Fixed diagonal matrix at every step.
EvolutionFamily diagonal_family(std::vector<double> entries,
                                VectorNorm norm = VectorNorm::Linf);
/// Listed matrices; repeats the list when periodic, else holds the last
/// matrix forever (families are total in n).
EvolutionFamily dense_periodic(std::vector<Matrix> steps, bool periodic,
                               VectorNorm norm = VectorNorm::L1);

// Seeded generators. The PRNG is splitmix64 keyed by (seed, n, slot), so
// coefficient access is total, order-independent and reproducible across
// platforms; reports should record the seed.
EvolutionFamily random_family(std::uint64_t seed, std::size_t dim, double radius,
                              VectorNorm norm = VectorNorm::L1);
/// Scalar coefficients uniform in [lo, hi].
EvolutionFamily random_scalar_family(std::uint64_t seed, double lo, double hi,
                                     VectorNorm norm = VectorNorm::L1);
/// Upper-triangular steps with diagonal entries uniform in
/// [diag_lo, diag_hi] and off-diagonal entries in [-radius, radius].
EvolutionFamily triangular_family(std::uint64_t seed, std::size_t dim,
                                  double diag_lo, double diag_hi, double radius,
                                  VectorNorm norm = VectorNorm::L1);
/// 2x2 rotation by a per-step random angle times a contraction rho.
EvolutionFamily rotation_contraction_family(std::uint64_t seed, double rho,
                                            VectorNorm norm = VectorNorm::L2);

/// Uniform double in [0, 1) from splitmix64; exposed for tests.
double unit_double(std::uint64_t seed, std::uint64_t n, std::uint64_t slot);

/// max over all pairs n <= m <= horizon of |table entry - closed_form(m, n)|
/// in the log domain; entries that are both -inf count as 0, a -inf/finite
/// mismatch as +inf.
double oracle_compare(const EvolutionFamily& family,
                      const std::function<LogMagnitude(index_t, index_t)>& closed_form,
                      index_t horizon);

}  // namespace expstab::zoo
