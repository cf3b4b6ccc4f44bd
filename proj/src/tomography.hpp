/*
   Copyright 2026 ghostsim contributors
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at
       http://www.apache.org/licenses/LICENSE-2.0
   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GHOSTSIM_TOMOGRAPHY_HPP
#define GHOSTSIM_TOMOGRAPHY_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "quadrature.hpp"
#include "units.hpp"

namespace ghostsim::tomography {

/// Joint placement of probe charge A and reference charge B, each in its
/// Left or Right region. Index order fixes the basis of every 4x4 matrix.
enum class Configuration : int {
  kRightRight = 0,  ///< A right, B right
  kLeftLeft = 1,    ///< A left,  B left
  kRightLeft = 2,   ///< A right, B left
  kLeftRight = 3,   ///< A left,  B right
};

inline constexpr int kConfigCount = 4;
inline constexpr std::array<Configuration, kConfigCount> kConfigurations = {
    Configuration::kRightRight, Configuration::kLeftLeft, Configuration::kRightLeft,
    Configuration::kLeftRight};

/// The one-left-one-right subspace probed by the exchange observable.
inline constexpr Configuration kExchangeBra = Configuration::kRightLeft;
inline constexpr Configuration kExchangeKet = Configuration::kLeftRight;

const char* configuration_label(Configuration c);

/// Two charges, each superposed across a Left and a Right branch position,
/// plus the mode grid and the interaction time over which Coulomb phases
/// accumulate. Positions in r0, charges in e, time in natural units.
struct TomographyScenario {
  Position3 r_al;
  Position3 r_ar;
  Position3 r_bl;
  Position3 r_br;
  double q_a = 1.0;
  double q_b = 1.0;
  CutoffPair cutoffs;
  RadialModeGrid grid = RadialModeGrid::log_uniform(CutoffPair{});
  double interaction_time = 0.0;

  Position3 a_position(Configuration c) const;
  Position3 b_position(Configuration c) const;

  /// Finite positions and charges, valid cutoffs, grid covering them,
  /// nonnegative interaction time. Degenerate geometries are allowed here
  /// so closed-loop (rejoined-path) limits can be evaluated.
  void validate() const;

  /// Stricter check used at config ingestion: all four positions pairwise
  /// distinct and L/R branches on opposite sides of the partition plane
  /// {r : normal . r = offset} (default: the x = 0 plane, Left at x < 0).
  void validate_partition(const Position3& normal = {1.0, 0.0, 0.0}, double offset = 0.0) const;
};

/// Point source with a signed weight in units of e; differences of
/// configuration amplitudes are sums over such sources.
struct WeightedSource {
  Position3 position;
  double weight = 0.0;
};

/// The four signed sources whose summed amplitude equals
/// lambda_c(k) - lambda_c'(k): plus the charges of c, minus those of c'.
std::array<WeightedSource, 4> pair_sources(const TomographyScenario& scn, Configuration c,
                                           Configuration c_prime);

/// Solid-angle-reduced radial integrand of |sum_u w_u lambda_u(k)|^2 for an
/// arbitrary signed source list:
/// 4 pi k^2 gamma(k)^2 sum_uv w_u w_v sinc(k |r_u - r_v|),
/// gamma(k) = g(k, 1)/(hbar omega). Throws std::domain_error for k <= 0.
double signed_distance_sq_integrand(double k, std::span<const WeightedSource> sources,
                                    const PhysicsContext& ctx);

/// Mode-summed squared distance |lambda_c - lambda_c'|^2 between the field
/// states of two configurations, by radial quadrature of the reduced
/// integrand. The IR-divergent self terms cancel because the signed weights
/// sum to zero; that cancellation is asserted numerically
/// (NumericalCheckError on violation). ConfigError on grid/cutoff mismatch.
double pair_distance_sq(const TomographyScenario& scn, Configuration c, Configuration c_prime,
                        const PhysicsContext& ctx);

/// Gram matrix of the four constrained field states.
struct FieldGram {
  /// G[c][c'] = <lambda_c | lambda_c'>. For static real charges the
  /// solid-angle average kills the imaginary part of the mode sum, so
  /// entries are real in (0, 1]; the type stays complex to keep the
  /// Hermitian contract explicit. Diagonal exactly 1.
  Eigen::Matrix4cd overlap;
  /// Mode-summed |lambda_c - lambda_c'|^2; overlap = exp(-distance_sq/2).
  /// Kept alongside so callers can report log-visibilities that would
  /// underflow the exponentiated entry. Diagonal exactly 0.
  Eigen::Matrix4d distance_sq;
};

FieldGram field_gram(const TomographyScenario& scn, const PhysicsContext& ctx);

/// Coulomb phase accumulated by charges q_i, q_j (units of e) held at fixed
/// separation for the given time: -q_i q_j e^2 T / (4 pi eps0 hbar |r|).
/// Throws std::domain_error for coincident positions or negative time.
double coulomb_phase(const Position3& r_i, const Position3& r_j, double q_i, double q_j,
                     double time, const PhysicsContext& ctx);

/// Coulomb phase of one configuration's A-B pair over the scenario's
/// interaction time.
double configuration_phase(const TomographyScenario& scn, Configuration c,
                           const PhysicsContext& ctx);

/// Reduced state of the two charges after tracing out the field:
/// rho[c][c'] = (1/4) exp(i(phi_c - phi_c')) G[c'][c].
struct ChargeDensityMatrix {
  Eigen::Matrix4cd rho;

  /// Hermiticity, unit trace, and positive semidefiniteness to tol.
  /// Throws NumericalCheckError on violation.
  void validate(double tol = 1e-10) const;
};

ChargeDensityMatrix reduced_density_matrix(const TomographyScenario& scn,
                                           const PhysicsContext& ctx);

/// Same, reusing an already-computed Gram matrix of the scenario.
ChargeDensityMatrix reduced_density_matrix(const TomographyScenario& scn,
                                           const PhysicsContext& ctx, const FieldGram& gram);

/// Exchange observable restricted to the one-left-one-right subspace.
struct ExchangeExpectation {
  double conditional_value = 0.0;  ///< in [-1, 1], conditioned on the subspace
  double subspace_weight = 0.0;    ///< probability of the subspace
};

/// 2 Re(rho[RL][LR]) / w with w the summed diagonal weight of the subspace.
/// Throws UndefinedConditionalError when w vanishes.
ExchangeExpectation exchange_expectation(const ChargeDensityMatrix& rho);

/// |G[RL][LR]|, the modulus the open-loop protocol extracts.
double probe_visibility(const TomographyScenario& scn, const PhysicsContext& ctx);

/// Entropy (bits) of a 2x2 state with diagonal 1/2 and off-diagonal
/// modulus v/2: eigenvalues (1 +- v)/2. Throws std::domain_error unless
/// 0 <= v <= 1.
double entanglement_entropy_bits(double overlap_modulus);

/// Charge-field entanglement entropy for the single-charge variant: A
/// superposed across r_AL / r_AR, B held at one fixed position. B's
/// contribution cancels between the branches, so the result depends only
/// on A's geometry and charge.
double probe_entanglement_entropy(const TomographyScenario& scn, const PhysicsContext& ctx);

}  // namespace ghostsim::tomography

#endif  // GHOSTSIM_TOMOGRAPHY_HPP
