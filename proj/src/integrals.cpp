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

#include "integrals.hpp"

#include <cmath>
#include <stdexcept>

#include "coupling.hpp"
#include "errors.hpp"

namespace ghostsim {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
  }
  return std::sin(x) / x;
}

double per_mode_distance_sq(const WaveVector& kvec, const SeparationGeometry& geom, double q,
                            const PhysicsContext& ctx) {
  const double k = kvec.k();
  if (!(k > 0.0)) {
    throw std::domain_error("per_mode_distance_sq: wavenumber must be strictly positive");
  }
  const double g = mode_coupling(k, q, ctx);
  const double hbar_omega = ctx.hbar * ctx.c * k;
  const double ratio = g / hbar_omega;
  const double phase = kvec.dot(geom.r_a - geom.r_b);
  return 2.0 * ratio * ratio * (1.0 - std::cos(phase));
}

double radial_number_integrand(double k, double delta_r, double q, const PhysicsContext& ctx) {
  if (!(k > 0.0)) {
    throw std::domain_error("radial_number_integrand: wavenumber must be strictly positive");
  }
  if (delta_r < 0.0) {
    throw std::domain_error("radial_number_integrand: separation must be nonnegative");
  }
  const double g = mode_coupling(k, q, ctx);
  const double hbar_omega = ctx.hbar * ctx.c * k;
  const double ratio = g / hbar_omega;
  return 4.0 * kPi * k * k * 2.0 * ratio * ratio * (1.0 - sinc(k * delta_r));
}

double total_photon_number(const SeparationGeometry& geom, double q, const CutoffPair& cutoffs,
                           const RadialModeGrid& grid, const PhysicsContext& ctx) {
  cutoffs.validate();
  if (!grid.covers(cutoffs)) {
    throw ConfigError("total_photon_number: quadrature grid does not cover the cutoffs");
  }
  const double delta_r = geom.delta_r();
  if (delta_r == 0.0) {
    return 0.0;
  }
  return grid.integrate(
      [&](double k) { return radial_number_integrand(k, delta_r, q, ctx); });
}

double visibility(double n) {
  if (n < 0.0 || !std::isfinite(n)) {
    throw std::domain_error("visibility: photon number must be nonnegative");
  }
  return std::exp(-0.5 * n);
}

double charge_decoherence_scaling(double q, const PhysicsContext& ctx) {
  if (q < 0.0) {
    throw std::domain_error("charge_decoherence_scaling: charge must be nonnegative");
  }
  const double ratio = q * ctx.e_charge / ctx.planck_charge;
  return -std::expm1(-ratio * ratio);
}

double mass_decoherence_scaling(double m, const PhysicsContext& ctx) {
  if (m < 0.0) {
    throw std::domain_error("mass_decoherence_scaling: mass must be nonnegative");
  }
  const double ratio = m / ctx.planck_mass;
  return -std::expm1(-ratio * ratio);
}

}  // namespace ghostsim
