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

#include "tomography.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "coupling.hpp"
#include "errors.hpp"
#include "integrals.hpp"

namespace ghostsim::tomography {

namespace {

constexpr double kCancellationTol = 1e-10;
constexpr double kNegativeFloorTol = 1e-12;

int idx(Configuration c) { return static_cast<int>(c); }

}  // namespace

const char* configuration_label(Configuration c) {
  switch (c) {
    case Configuration::kRightRight:
      return "AR,BR";
    case Configuration::kLeftLeft:
      return "AL,BL";
    case Configuration::kRightLeft:
      return "AR,BL";
    case Configuration::kLeftRight:
      return "AL,BR";
  }
  throw std::domain_error("unknown configuration index");
}

Position3 TomographyScenario::a_position(Configuration c) const {
  switch (c) {
    case Configuration::kRightRight:
    case Configuration::kRightLeft:
      return r_ar;
    case Configuration::kLeftLeft:
    case Configuration::kLeftRight:
      return r_al;
  }
  throw std::domain_error("unknown configuration index");
}

Position3 TomographyScenario::b_position(Configuration c) const {
  switch (c) {
    case Configuration::kRightRight:
    case Configuration::kLeftRight:
      return r_br;
    case Configuration::kLeftLeft:
    case Configuration::kRightLeft:
      return r_bl;
  }
  throw std::domain_error("unknown configuration index");
}

void TomographyScenario::validate() const {
  if (!r_al.finite() || !r_ar.finite() || !r_bl.finite() || !r_br.finite()) {
    throw std::domain_error("scenario positions must be finite");
  }
  if (!std::isfinite(q_a) || !std::isfinite(q_b)) {
    throw std::domain_error("scenario charges must be finite");
  }
  cutoffs.validate();
  if (!grid.covers(cutoffs)) {
    throw ConfigError("scenario grid does not cover its cutoffs");
  }
  if (!(interaction_time >= 0.0) || !std::isfinite(interaction_time)) {
    throw std::domain_error("interaction time must be nonnegative and finite");
  }
}

void TomographyScenario::validate_partition(const Position3& normal, double offset) const {
  validate();
  const double nn = normal.norm();
  if (!(nn > 0.0)) throw std::domain_error("partition normal must be nonzero");

  const std::array<std::pair<const Position3*, const char*>, 4> all = {
      std::pair{&r_al, "r_al"}, std::pair{&r_ar, "r_ar"}, std::pair{&r_bl, "r_bl"},
      std::pair{&r_br, "r_br"}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if ((*all[i].first - *all[j].first).norm() == 0.0) {
        throw std::domain_error(std::string("scenario positions ") + all[i].second + " and " +
                                all[j].second + " coincide");
      }
    }
  }

  const auto side = [&](const Position3& r) { return normal.dot(r) - offset * nn; };
  for (const Position3* left : {&r_al, &r_bl}) {
    if (!(side(*left) < 0.0)) {
      throw std::domain_error("Left-branch position lies on the Right side of the partition");
    }
  }
  for (const Position3* right : {&r_ar, &r_br}) {
    if (!(side(*right) > 0.0)) {
      throw std::domain_error("Right-branch position lies on the Left side of the partition");
    }
  }
}

std::array<WeightedSource, 4> pair_sources(const TomographyScenario& scn, Configuration c,
                                           Configuration c_prime) {
  return {WeightedSource{scn.a_position(c), scn.q_a}, WeightedSource{scn.b_position(c), scn.q_b},
          WeightedSource{scn.a_position(c_prime), -scn.q_a},
          WeightedSource{scn.b_position(c_prime), -scn.q_b}};
}

double signed_distance_sq_integrand(double k, std::span<const WeightedSource> sources,
                                    const PhysicsContext& ctx) {
  if (!(k > 0.0)) throw std::domain_error("wavenumber must be positive");
  const double omega = ctx.c * k;
  const double gamma = mode_coupling(k, 1.0, ctx) / (ctx.hbar * omega);
  double pair_sum = 0.0;
  for (std::size_t u = 0; u < sources.size(); ++u) {
    for (std::size_t v = 0; v < sources.size(); ++v) {
      const double d = (sources[u].position - sources[v].position).norm();
      pair_sum += sources[u].weight * sources[v].weight * sinc(k * d);
    }
  }
  return 4.0 * kPi * k * k * gamma * gamma * pair_sum;
}

double pair_distance_sq(const TomographyScenario& scn, Configuration c, Configuration c_prime,
                        const PhysicsContext& ctx) {
  if (c == c_prime) return 0.0;
  if (!scn.grid.covers(scn.cutoffs)) {
    throw ConfigError("scenario grid does not cover its cutoffs");
  }
  const auto sources = pair_sources(scn, c, c_prime);

  double total = 0.0;
  double total_abs = 0.0;
  for (const auto& s : sources) {
    total += s.weight;
    total_abs += std::abs(s.weight);
  }
  if (total_abs == 0.0) return 0.0;
  // The k -> 0 self-energy of each branch diverges with the IR cutoff; it
  // drops out of the difference only because the signed weights sum to
  // zero, so that cancellation is asserted rather than assumed.
  if (std::abs(total) > kCancellationTol * total_abs) {
    throw NumericalCheckError("signed source weights fail to cancel: residual " +
                              std::to_string(std::abs(total) / total_abs));
  }

  const double value = scn.grid.integrate(
      [&](double k) { return signed_distance_sq_integrand(k, sources, ctx); });
  if (!std::isfinite(value)) {
    throw NumericalCheckError("pair distance integral is not finite");
  }
  if (value < 0.0) {
    // Degenerate geometries cancel only in exact arithmetic; the rounded sum
    // may land just below zero. Anything beyond rounding scale of the
    // unsigned magnitude is a genuine sign error.
    const double scale = scn.grid.integrate([&](double k) {
      const double omega = ctx.c * k;
      const double gamma = mode_coupling(k, 1.0, ctx) / (ctx.hbar * omega);
      return 4.0 * kPi * k * k * gamma * gamma * total_abs * total_abs;
    });
    if (-value > kNegativeFloorTol * scale) {
      throw NumericalCheckError("pair distance integral is negative beyond rounding scale");
    }
    return 0.0;
  }
  return value;
}

FieldGram field_gram(const TomographyScenario& scn, const PhysicsContext& ctx) {
  scn.validate();
  FieldGram gram;
  gram.overlap = Eigen::Matrix4cd::Identity();
  gram.distance_sq = Eigen::Matrix4d::Zero();
  for (int i = 0; i < kConfigCount; ++i) {
    for (int j = i + 1; j < kConfigCount; ++j) {
      const double d2 = pair_distance_sq(scn, kConfigurations[i], kConfigurations[j], ctx);
      gram.distance_sq(i, j) = d2;
      gram.distance_sq(j, i) = d2;
      const double overlap = std::exp(-0.5 * d2);
      gram.overlap(i, j) = overlap;
      gram.overlap(j, i) = overlap;
    }
  }
  return gram;
}

double coulomb_phase(const Position3& r_i, const Position3& r_j, double q_i, double q_j,
                     double time, const PhysicsContext& ctx) {
  const double r = (r_i - r_j).norm();
  if (!(r > 0.0)) throw std::domain_error("Coulomb phase of coincident positions");
  if (!(time >= 0.0)) throw std::domain_error("interaction time must be nonnegative");
  const double e2 = ctx.e_charge * ctx.e_charge;
  return -(q_i * q_j * e2 * time) / (4.0 * kPi * ctx.eps0 * ctx.hbar * r);
}

double configuration_phase(const TomographyScenario& scn, Configuration c,
                           const PhysicsContext& ctx) {
  if (scn.interaction_time == 0.0) return 0.0;
  return coulomb_phase(scn.a_position(c), scn.b_position(c), scn.q_a, scn.q_b,
                       scn.interaction_time, ctx);
}

void ChargeDensityMatrix::validate(double tol) const {
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol) {
    throw NumericalCheckError("density matrix is not Hermitian: deviation " +
                              std::to_string(herm_dev));
  }
  const double trace_dev = std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
  if (trace_dev > tol) {
    throw NumericalCheckError("density matrix trace deviates from 1 by " +
                              std::to_string(trace_dev));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw NumericalCheckError("density matrix eigendecomposition failed");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    throw NumericalCheckError("density matrix has negative eigenvalue " +
                              std::to_string(min_eig));
  }
}

ChargeDensityMatrix reduced_density_matrix(const TomographyScenario& scn,
                                           const PhysicsContext& ctx) {
  return reduced_density_matrix(scn, ctx, field_gram(scn, ctx));
}

ChargeDensityMatrix reduced_density_matrix(const TomographyScenario& scn,
                                           const PhysicsContext& ctx, const FieldGram& gram) {
  std::array<double, kConfigCount> phase{};
  for (int i = 0; i < kConfigCount; ++i) {
    phase[i] = configuration_phase(scn, kConfigurations[i], ctx);
  }
  ChargeDensityMatrix out;
  for (int i = 0; i < kConfigCount; ++i) {
    for (int j = 0; j < kConfigCount; ++j) {
      const std::complex<double> branch_phase =
          std::exp(std::complex<double>(0.0, phase[i] - phase[j]));
      out.rho(i, j) = 0.25 * branch_phase * gram.overlap(j, i);
    }
  }
  return out;
}

ExchangeExpectation exchange_expectation(const ChargeDensityMatrix& rho) {
  const int bra = idx(kExchangeBra);
  const int ket = idx(kExchangeKet);
  const double weight = rho.rho(bra, bra).real() + rho.rho(ket, ket).real();
  if (!(weight > 0.0)) {
    throw UndefinedConditionalError(
        "one-left-one-right subspace has zero weight; conditional expectation undefined");
  }
  ExchangeExpectation out;
  out.subspace_weight = weight;
  out.conditional_value = 2.0 * rho.rho(bra, ket).real() / weight;
  return out;
}

double probe_visibility(const TomographyScenario& scn, const PhysicsContext& ctx) {
  scn.validate();
  const double d2 = pair_distance_sq(scn, kExchangeBra, kExchangeKet, ctx);
  return std::exp(-0.5 * d2);
}

double entanglement_entropy_bits(double overlap_modulus) {
  if (!(overlap_modulus >= 0.0) || overlap_modulus > 1.0 + 1e-12) {
    throw std::domain_error("overlap modulus must lie in [0, 1]");
  }
  const double v = std::min(overlap_modulus, 1.0);
  const double p_plus = 0.5 * (1.0 + v);
  const double p_minus = 0.5 * (1.0 - v);
  double h = 0.0;
  for (double p : {p_plus, p_minus}) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double probe_entanglement_entropy(const TomographyScenario& scn, const PhysicsContext& ctx) {
  scn.validate();
  // B sits at the same place in both branches, so its sources cancel
  // exactly; only A's branch pair survives.
  const std::array<WeightedSource, 2> sources = {WeightedSource{scn.r_ar, scn.q_a},
                                                 WeightedSource{scn.r_al, -scn.q_a}};
  if (scn.q_a == 0.0) return 0.0;
  const double d2 = scn.grid.integrate(
      [&](double k) { return signed_distance_sq_integrand(k, sources, ctx); });
  return entanglement_entropy_bits(std::exp(-0.5 * d2));
}

}  // namespace ghostsim::tomography
