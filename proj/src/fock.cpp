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

#include "fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace ghostsim::fock {

namespace {

void require_levels(int n_levels, int minimum = 1) {
  if (n_levels < minimum) {
    throw TruncationError("Fock truncation must keep at least " + std::to_string(minimum) +
                              " levels, got " + std::to_string(n_levels),
                          minimum);
  }
}

}  // namespace

Eigen::VectorXd MMetric::diagonal() const {
  Eigen::VectorXd d(levels);
  for (int n = 0; n < levels; ++n) d[n] = sign(n);
  return d;
}

int required_levels(std::complex<double> lambda, double tail_tol) {
  if (!(tail_tol > 0.0)) throw std::domain_error("tail tolerance must be positive");
  const double mu = std::norm(lambda);
  if (!std::isfinite(mu)) throw std::domain_error("coherent amplitude must be finite");
  const int hard_cap = 1 << 20;
  if (mu > 700.0) {
    // exp(-mu) underflows; refuse rather than certify a tail we cannot bound.
    throw TruncationError("coherent amplitude too large to truncate", hard_cap);
  }
  // Walk Poisson weights term_n = e^{-mu} mu^n / n!. Once q = mu/(n+1) < 1
  // the remaining tail is at most term_n q/(1-q), a bound that stays valid
  // below the resolution of 1 - sum.
  double term = std::exp(-mu);
  int n = 0;
  while (n < hard_cap) {
    const double q = mu / (n + 1);
    if (q < 1.0 && term * (q / (1.0 - q)) <= tail_tol) break;
    ++n;
    term *= mu / n;
  }
  if (n >= hard_cap) {
    throw TruncationError("coherent amplitude too large to truncate", hard_cap);
  }
  return n + 1;
}

FockVector displace(std::complex<double> lambda, int n_levels) {
  require_levels(n_levels);
  const int needed = required_levels(lambda);
  if (n_levels < needed) {
    std::ostringstream msg;
    msg << "coherent state of amplitude " << std::abs(lambda) << " needs " << needed
        << " levels to keep tail mass below " << kTailTolerance << ", got " << n_levels;
    throw TruncationError(msg.str(), needed);
  }
  FockVector psi;
  psi.coeffs = Eigen::VectorXcd::Zero(n_levels);
  std::complex<double> c = std::exp(-0.5 * std::norm(lambda));
  psi.coeffs[0] = c;
  for (int n = 1; n < n_levels; ++n) {
    c *= lambda / std::sqrt(static_cast<double>(n));
    psi.coeffs[n] = c;
  }
  return psi;
}

std::complex<double> coherent_overlap(std::complex<double> lambda_a,
                                      std::complex<double> lambda_b) {
  return std::exp(-0.5 * std::norm(lambda_a) - 0.5 * std::norm(lambda_b) +
                  std::conj(lambda_a) * lambda_b);
}

std::complex<double> m_inner(const FockVector& psi, const FockVector& phi, const MMetric& m) {
  if (psi.levels() != phi.levels()) {
    throw DimensionError("m_inner arguments differ in truncation: " +
                         std::to_string(psi.levels()) + " vs " + std::to_string(phi.levels()));
  }
  if (m.levels != psi.levels()) {
    throw DimensionError("metric truncation " + std::to_string(m.levels) +
                         " does not match states at " + std::to_string(psi.levels()));
  }
  std::complex<double> acc = 0.0;
  for (int n = 0; n < psi.levels(); ++n) {
    acc += m.sign(n) * std::conj(psi.coeffs[n]) * phi.coeffs[n];
  }
  return acc;
}

Eigen::MatrixXd lowering_matrix(int n_levels) {
  require_levels(n_levels);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_levels, n_levels);
  for (int n = 1; n < n_levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd parity_matrix(int n_levels) {
  require_levels(n_levels);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_levels, n_levels);
  for (int n = 0; n < n_levels; ++n) m(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return m;
}

Eigen::MatrixXd scalar_raising_matrix(int n_levels) {
  require_levels(n_levels);
  return -lowering_matrix(n_levels).transpose();
}

LadderReport ladder_report_on(const Eigen::MatrixXd& a, const Eigen::MatrixXd& a_t,
                              const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || a_t.rows() != n || a_t.cols() != n || m.rows() != n || m.cols() != n) {
    throw DimensionError("ladder check requires square matrices of one size");
  }
  LadderReport report;
  report.levels = n;

  const Eigen::MatrixXd comm = a * a_t - a_t * a;
  // [a, a^T] = -1 holds exactly below the truncation edge; the (n-1, n-1)
  // entry absorbs the cut and is reported separately.
  Eigen::MatrixXd dev = comm + Eigen::MatrixXd::Identity(n, n);
  report.top_level_dev = std::abs(dev(n - 1, n - 1));
  dev(n - 1, n - 1) = 0.0;
  report.commutator_dev = dev.cwiseAbs().maxCoeff();

  report.m_adjoint_dev = (a_t - m * a.transpose() * m).cwiseAbs().maxCoeff();
  report.m_square_dev = (m * m - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return report;
}

LadderReport ladder_check(int n_levels) {
  require_levels(n_levels, 4);
  return ladder_report_on(lowering_matrix(n_levels), scalar_raising_matrix(n_levels),
                          parity_matrix(n_levels));
}

std::vector<LadderNormSample> ladder_norm_signs(int n_levels, int max_m) {
  require_levels(n_levels, max_m + 1);
  if (max_m < 1) throw std::domain_error("max_m must be at least 1");
  const Eigen::MatrixXd a = lowering_matrix(n_levels);
  const Eigen::MatrixXd a_t = scalar_raising_matrix(n_levels);
  const Eigen::MatrixXd m = parity_matrix(n_levels);

  std::vector<LadderNormSample> samples;
  samples.reserve(max_m);
  Eigen::VectorXd state = Eigen::VectorXd::Zero(n_levels);
  state[0] = 1.0;
  for (int power = 1; power <= max_m; ++power) {
    state = a_t * state;
    Eigen::VectorXd lowered = state;
    for (int i = 0; i < power; ++i) lowered = a * lowered;
    LadderNormSample s;
    s.m = power;
    s.indefinite_norm = lowered[0];
    Eigen::VectorXd mstate = m * state;
    Eigen::VectorXd mlowered = mstate;
    for (int i = 0; i < power; ++i) mlowered = a * mlowered;
    s.metric_norm = mlowered[0];
    samples.push_back(s);
  }
  return samples;
}

double supplementary_residual(std::complex<double> lambda, const FockVector& psi) {
  const double nrm = psi.norm();
  if (!(nrm > 0.0)) throw std::domain_error("supplementary residual of a zero state");
  const int n_levels = psi.levels();
  Eigen::VectorXcd res = Eigen::VectorXcd::Zero(n_levels);
  for (int n = 0; n + 1 < n_levels; ++n) {
    res[n] = std::sqrt(static_cast<double>(n + 1)) * psi.coeffs[n + 1];
  }
  res -= lambda * psi.coeffs;
  return res.norm() / nrm;
}

DrivenGroundState driven_ground_state(double omega, double drive, int n_levels) {
  if (!(omega > 0.0)) throw std::domain_error("mode frequency must be positive");
  DrivenGroundState out;
  out.lambda = std::complex<double>(-drive / omega, 0.0);
  out.state = displace(out.lambda, n_levels);
  out.mean_position = 2.0 * out.lambda.real() / std::sqrt(2.0 * omega);
  return out;
}

}  // namespace ghostsim::fock
