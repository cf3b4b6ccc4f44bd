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

#ifndef GHOSTSIM_COUPLING_HPP
#define GHOSTSIM_COUPLING_HPP

#include <complex>
#include <span>

#include "geometry.hpp"
#include "units.hpp"

namespace ghostsim {

/// Charge-scalar-mode coupling g(k) = q c sqrt(hbar / (2 eps0 omega(k) (2 pi)^3)),
/// with q given in units of the elementary charge. Scales as q k^{-1/2}.
/// Throws std::domain_error for k <= 0.
double mode_coupling(double k, double q, const PhysicsContext& ctx);

/// Coherent amplitude of the constrained scalar-mode state for a static
/// charge configuration: sum over charges of g_c(k)/(hbar omega(k)) *
/// exp(-i kvec . r_c). This is the eigenvalue the supplementary condition
/// forces on the mode's annihilation operator.
std::complex<double> coherent_amplitude(const WaveVector& kvec,
                                        std::span<const PointCharge> charges,
                                        const PhysicsContext& ctx);

std::complex<double> coherent_amplitude(const WaveVector& kvec, const ChargeConfiguration& cfg,
                                        const PhysicsContext& ctx);

/// Mean scalar-photon number carried by one mode: |coherent_amplitude|^2.
/// For a single charge this scales exactly as k^{-3}.
double mode_mean_photons(const WaveVector& kvec, const ChargeConfiguration& cfg,
                         const PhysicsContext& ctx);

}  // namespace ghostsim

#endif  // GHOSTSIM_COUPLING_HPP
