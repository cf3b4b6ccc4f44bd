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

#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "errors.hpp"
#include "fock.hpp"
#include "oracles.hpp"

using namespace ghostsim;
using namespace ghostsim::fock;
using oracles::rel_err;
using cplx = std::complex<double>;

namespace {
FockVector basis_state(int n, int levels) {
  FockVector v;
  v.coeffs = Eigen::VectorXcd::Zero(levels);
  v.coeffs[n] = 1.0;
  return v;
}
}  // namespace

TEST_CASE("displacement reproduces the Poisson amplitudes") {
  const cplx lambda{0.8, -0.45};
  const FockVector psi = displace(lambda, 64);
  CHECK(psi.levels() == 64);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-14);

  // c_n = exp(-|l|^2/2) l^n / sqrt(n!).
  double factorial = 1.0;
  for (int n = 0; n < 6; ++n) {
    if (n > 0) factorial *= n;
    const cplx expected = std::exp(-0.5 * std::norm(lambda)) * std::pow(lambda, n) /
                          std::sqrt(factorial);
    CHECK(std::abs(psi.coeffs[n] - expected) < 1e-15);
  }

  const FockVector vac = displace(0.0, 8);
  CHECK(vac.coeffs[0] == cplx{1.0, 0.0});
  CHECK(vac.coeffs.tail(7).norm() == 0.0);
}

TEST_CASE("required levels certify the Poisson tail") {
  CHECK(required_levels(0.0) == 1);
  CHECK(required_levels(cplx{0.5, 0.0}) <= required_levels(cplx{2.0, 0.0}));
  // Phase of the amplitude is irrelevant.
  CHECK(required_levels(cplx{0.0, 1.3}) == required_levels(cplx{1.3, 0.0}));

  const cplx lambda{1.5, 0.5};
  const int needed = required_levels(lambda);
  // The certified truncation really does carry all but < 1e-12 of the mass.
  const FockVector tight = displace(lambda, needed);
  CHECK(std::abs(tight.norm() * tight.norm() - 1.0) < 1e-12);
  // One level fewer is refused, and the error reports the requirement.
  try {
    displace(lambda, needed - 1);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.required_levels() == needed);
  }
  CHECK_THROWS_AS(required_levels(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(required_levels(cplx{30.0, 0.0}), TruncationError);
}

TEST_CASE("closed-form coherent overlap") {
  const cplx a{0.7, 0.3};
  const cplx b{-0.2, 0.5};
  CHECK(std::abs(coherent_overlap(a, a) - cplx{1.0, 0.0}) < 1e-15);
  // |<a|b>|^2 = exp(-|a-b|^2), 40-digit reference for this pair.
  CHECK(rel_err(std::norm(coherent_overlap(a, b)), 0.42741493194872666992) < 1e-14);
  // Conjugate symmetry <a|b> = conj(<b|a>).
  const cplx fwd = coherent_overlap(a, b);
  const cplx bwd = coherent_overlap(b, a);
  CHECK(std::abs(fwd - std::conj(bwd)) < 1e-16);
  // Brute-force truncated contraction agrees.
  const FockVector psi = displace(a, 64);
  const FockVector phi = displace(b, 64);
  const cplx brute = psi.coeffs.dot(phi.coeffs);
  CHECK(std::abs(brute - fwd) < 1e-12);
}

TEST_CASE("indefinite inner product") {
  const MMetric metric{8};
  CHECK(metric.sign(0) == 1.0);
  CHECK(metric.sign(1) == -1.0);
  CHECK(metric.sign(6) == 1.0);

  // One scalar photon has indefinite norm -1; even levels are positive.
  CHECK(m_inner(basis_state(1, 8), basis_state(1, 8), metric) == cplx{-1.0, 0.0});
  CHECK(m_inner(basis_state(0, 8), basis_state(0, 8), metric) == cplx{1.0, 0.0});
  CHECK(m_inner(basis_state(2, 8), basis_state(2, 8), metric) == cplx{1.0, 0.0});
  CHECK(m_inner(basis_state(1, 8), basis_state(2, 8), metric) == cplx{0.0, 0.0});

  // Coherent state: sum (-1)^n |c_n|^2 = exp(-2 |lambda|^2).
  const cplx lambda{0.7, 0.3};
  const FockVector psi = displace(lambda, 64);
  const MMetric wide{64};
  CHECK(rel_err(m_inner(psi, psi, wide).real(), 0.31348618088260530459) < 1e-13);

  CHECK_THROWS_AS(m_inner(basis_state(0, 8), basis_state(0, 9), MMetric{8}), DimensionError);
  CHECK_THROWS_AS(m_inner(basis_state(0, 8), basis_state(0, 8), MMetric{9}), DimensionError);
}

TEST_CASE("ladder matrices and the truncated commutator") {
  const Eigen::MatrixXd a = lowering_matrix(4);
  CHECK(a(0, 1) == 1.0);
  CHECK(rel_err(a(1, 2), std::sqrt(2.0)) < 1e-16);
  CHECK(a(3, 3) == 0.0);
  const Eigen::MatrixXd a_t = scalar_raising_matrix(4);
  CHECK((a_t + a.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXd m = parity_matrix(4);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 1) == -1.0);

  const LadderReport report = ladder_check(16);
  CHECK(report.levels == 16);
  CHECK(report.commutator_dev <= 1e-14);
  CHECK(report.m_adjoint_dev == 0.0);
  CHECK(report.m_square_dev == 0.0);
  // The truncation edge absorbs the cut: deviation exactly N up to rounding.
  CHECK(rel_err(report.top_level_dev, 16.0) < 1e-14);
  CHECK(report.passed(1e-14));

  CHECK_THROWS_AS(ladder_check(3), TruncationError);
}

TEST_CASE("mutation: the ordinary raising operator fails the scalar checks") {
  const Eigen::MatrixXd a = lowering_matrix(12);
  const Eigen::MatrixXd wrong_sign = a.transpose();  // a-dagger, not -a-dagger
  const Eigen::MatrixXd m = parity_matrix(12);
  const LadderReport report = ladder_report_on(a, wrong_sign, m);
  // [a, a-dagger] = +1, so the deviation from -1 is 2 everywhere below the edge.
  CHECK(report.commutator_dev > 1.0);
  CHECK(report.m_adjoint_dev > 1.0);
  CHECK_FALSE(report.passed(1e-10));

  CHECK_THROWS_AS(ladder_report_on(a, Eigen::MatrixXd::Zero(4, 4), m), DimensionError);
}

TEST_CASE("norm signs of raised states") {
  const auto samples = ladder_norm_signs(20, 6);
  REQUIRE(samples.size() == 6);
  double factorial = 1.0;
  for (const auto& s : samples) {
    factorial *= s.m;
    const double expected = (s.m % 2 == 0) ? factorial : -factorial;
    CHECK(rel_err(s.indefinite_norm, expected) < 1e-12);
    CHECK(rel_err(s.metric_norm, factorial) < 1e-12);
  }

  // The matrix-string value agrees with m_inner on the same state.
  const Eigen::MatrixXd a_t = scalar_raising_matrix(20);
  Eigen::VectorXd string = Eigen::VectorXd::Zero(20);
  string[0] = 1.0;
  string = a_t * (a_t * (a_t * string));
  FockVector state;
  state.coeffs = string.cast<cplx>();
  const cplx ind = m_inner(state, state, MMetric{20});
  CHECK(rel_err(ind.real(), samples[2].indefinite_norm) < 1e-12);

  CHECK_THROWS_AS(ladder_norm_signs(8, 0), std::domain_error);
  CHECK_THROWS_AS(ladder_norm_signs(4, 8), TruncationError);
}

TEST_CASE("supplementary-condition residual") {
  const cplx lambda{1.1, -0.6};
  const FockVector psi = displace(lambda, 64);
  CHECK(supplementary_residual(lambda, psi) < 1e-12);
  // Wrong eigenvalue leaves a residual |mu - lambda| for a coherent state.
  const cplx mu{0.4, 0.2};
  CHECK(rel_err(supplementary_residual(mu, psi), std::abs(mu - lambda)) < 1e-10);
  // The vacuum against lambda = 1 misses by exactly one unit of norm.
  CHECK(supplementary_residual(1.0, displace(0.0, 8)) == 1.0);

  FockVector zero;
  zero.coeffs = Eigen::VectorXcd::Zero(4);
  CHECK_THROWS_AS(supplementary_residual(0.5, zero), std::domain_error);
}

TEST_CASE("driven ground state is the displaced vacuum") {
  const DrivenGroundState d = driven_ground_state(0.5, 0.2, 32);
  CHECK(d.lambda == cplx{-0.4, 0.0});
  const FockVector direct = displace(d.lambda, 32);
  CHECK((d.state.coeffs - direct.coeffs).norm() == 0.0);
  CHECK(rel_err(d.mean_position, 2.0 * (-0.4) / std::sqrt(2.0 * 0.5)) < 1e-15);
  CHECK(supplementary_residual(d.lambda, d.state) < 1e-12);
  CHECK_THROWS_AS(driven_ground_state(0.0, 0.2, 16), std::domain_error);
  CHECK_THROWS_AS(driven_ground_state(-1.0, 0.2, 16), std::domain_error);
}
