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

#include "coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace ghostsim {

double mode_coupling(double k, double q, const PhysicsContext& ctx) {
  if (!(k > 0.0)) {
    throw std::domain_error("mode_coupling: wavenumber must be strictly positive");
  }
  const double omega = ctx.c * k;
  const double two_pi_cubed = (2.0 * kPi) * (2.0 * kPi) * (2.0 * kPi);
  return q * ctx.e_charge * ctx.c *
         std::sqrt(ctx.hbar / (2.0 * ctx.eps0 * omega * two_pi_cubed));
}

std::complex<double> coherent_amplitude(const WaveVector& kvec,
                                        std::span<const PointCharge> charges,
                                        const PhysicsContext& ctx) {
  const double k = kvec.k();
  if (!(k > 0.0)) {
    throw std::domain_error("coherent_amplitude: wavenumber must be strictly positive");
  }
  const double hbar_omega = ctx.hbar * ctx.c * k;
  std::complex<double> lambda{0.0, 0.0};
  for (const auto& ch : charges) {
    const double weight = mode_coupling(k, ch.q, ctx) / hbar_omega;
    const double phase = -kvec.dot(ch.position);
    lambda += weight * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return lambda;
}

std::complex<double> coherent_amplitude(const WaveVector& kvec, const ChargeConfiguration& cfg,
                                        const PhysicsContext& ctx) {
  return coherent_amplitude(kvec, std::span<const PointCharge>(cfg.charges), ctx);
}

double mode_mean_photons(const WaveVector& kvec, const ChargeConfiguration& cfg,
                         const PhysicsContext& ctx) {
  return std::norm(coherent_amplitude(kvec, cfg, ctx));
}

}  // namespace ghostsim
