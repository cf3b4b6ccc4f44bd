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

#ifndef GHOSTSIM_FOCK_HPP
#define GHOSTSIM_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace ghostsim::fock {

inline constexpr int kDefaultLevels = 64;
inline constexpr double kTailTolerance = 1e-12;

/// Truncated single-mode state in the number basis, coefficients c_0..c_{N-1}.
struct FockVector {
  Eigen::VectorXcd coeffs;

  int levels() const { return static_cast<int>(coeffs.size()); }
  double norm() const { return coeffs.norm(); }
};

/// Diagonal parity metric (+1, -1, +1, ...) implementing the indefinite-
/// metric construction on the scalar sector. M^2 = identity.
struct MMetric {
  int levels = kDefaultLevels;

  double sign(int n) const { return (n % 2 == 0) ? 1.0 : -1.0; }
  Eigen::VectorXd diagonal() const;
};

/// Smallest truncation whose Poisson tail mass drops below tail_tol.
int required_levels(std::complex<double> lambda, double tail_tol = kTailTolerance);

/// Coherent state |lambda> with c_n = exp(-|l|^2/2) l^n / sqrt(n!).
/// Refuses (TruncationError, carrying the required level count) when the
/// truncated tail mass exceeds kTailTolerance.
FockVector displace(std::complex<double> lambda, int n_levels);

/// Closed-form coherent overlap <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
/// Its modulus is exp(-|a-b|^2/2).
std::complex<double> coherent_overlap(std::complex<double> lambda_a,
                                      std::complex<double> lambda_b);

/// Indefinite inner product <psi| M |phi> with parity signs interleaved.
/// Throws DimensionError on mismatched truncations.
std::complex<double> m_inner(const FockVector& psi, const FockVector& phi, const MMetric& m);

/// Standard lowering operator a, a|n> = sqrt(n)|n-1>.
Eigen::MatrixXd lowering_matrix(int n_levels);

/// Parity matrix diag(+1,-1,...).
Eigen::MatrixXd parity_matrix(int n_levels);

/// Scalar-sector raising operator a^T = M a^dag M = -a^dag, the operator
/// conjugate to a under the indefinite metric ([a, a^T] = -1).
Eigen::MatrixXd scalar_raising_matrix(int n_levels);

/// Deviations of the truncated matrix representation from the scalar-photon
/// ladder algebra.
struct LadderReport {
  int levels = 0;
  /// max |([a, a^T] + 1)_{ij}| over the block excluding the top level
  double commutator_dev = 0.0;
  /// deviation of the top diagonal element (truncation artifact, nonzero)
  double top_level_dev = 0.0;
  /// max |(M a^dag M + a^dag)_{ij}|
  double m_adjoint_dev = 0.0;
  /// max |(M^2 - 1)_{ij}|
  double m_square_dev = 0.0;

  bool passed(double tol) const {
    return commutator_dev <= tol && m_adjoint_dev <= tol && m_square_dev <= tol;
  }
};

/// Verifies the ladder algebra on freshly built matrices; n_levels >= 4.
LadderReport ladder_check(int n_levels);

/// Same verification on caller-provided matrices (mutation testing hook).
LadderReport ladder_report_on(const Eigen::MatrixXd& a, const Eigen::MatrixXd& a_t,
                              const Eigen::MatrixXd& m);

/// Norms of (a^T)^m |0>: the indefinite norm <0| a^m (a^T)^m |0> alternates
/// in sign with m, the metric-repaired norm <0| a^m M (a^T)^m |0> = m! stays
/// positive.
struct LadderNormSample {
  int m = 0;
  double indefinite_norm = 0.0;
  double metric_norm = 0.0;
};
std::vector<LadderNormSample> ladder_norm_signs(int n_levels, int max_m);

/// Residual of the supplementary condition ||(a - lambda) psi|| / ||psi||
/// in the standard norm; zero iff psi is the coherent state |lambda> up to
/// the truncation tail. Throws std::domain_error on zero-norm psi.
double supplementary_residual(std::complex<double> lambda, const FockVector& psi);

/// Displaced ground state of H = hbar omega a^dag a + drive (a + a^dag),
/// with lambda = -drive / (hbar omega) (natural units hbar = 1 here).
struct DrivenGroundState {
  std::complex<double> lambda;
  FockVector state;
  double mean_position = 0.0;  ///< <x> with x = (a + a^dag)/sqrt(2 omega)
};
DrivenGroundState driven_ground_state(double omega, double drive, int n_levels);

}  // namespace ghostsim::fock

#endif  // GHOSTSIM_FOCK_HPP
