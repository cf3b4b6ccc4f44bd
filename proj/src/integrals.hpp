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

#ifndef GHOSTSIM_INTEGRALS_HPP
#define GHOSTSIM_INTEGRALS_HPP

#include "geometry.hpp"
#include "quadrature.hpp"
#include "units.hpp"

namespace ghostsim {

/// sin(x)/x with a series branch below |x| < 1e-4; sinc(0) = 1 exactly.
double sinc(double x);

/// Squared distance |lambda_a(k) - lambda_b(k)|^2 between the per-mode
/// coherent amplitudes of one charge q held at r_a versus r_b:
/// 2 g(k)^2 / (hbar omega)^2 * (1 - cos(kvec . (r_a - r_b))).
double per_mode_distance_sq(const WaveVector& kvec, const SeparationGeometry& geom, double q,
                            const PhysicsContext& ctx);

/// Exact solid-angle integral of per_mode_distance_sq at fixed |k|:
/// 4 pi k^2 * 2 g(k)^2/(hbar omega)^2 * (1 - sinc(k delta_r)).
/// Integrating this over k gives the total scalar-photon number.
double radial_number_integrand(double k, double delta_r, double q, const PhysicsContext& ctx);

/// Total scalar-photon number n separating the two branch field states,
/// integrated over [k_min, k_max] with the grid's quadrature. Grows like
/// (2 alpha / pi) (q/e)^2 ln(k_max delta_r) once k_max delta_r >> 1.
/// Throws ConfigError when the grid does not cover the cutoffs.
double total_photon_number(const SeparationGeometry& geom, double q, const CutoffPair& cutoffs,
                           const RadialModeGrid& grid, const PhysicsContext& ctx);

/// Interferometric visibility exp(-n/2) left by n scalar photons of
/// which-path information. Throws std::domain_error for n < 0.
double visibility(double n);

/// Charge-superposition decoherence scale 1 - exp(-(Q/Q_P)^2); Q in units
/// of the elementary charge. To lowest order this is alpha (Q/e)^2.
double charge_decoherence_scaling(double q, const PhysicsContext& ctx);

/// Gravitational analogue 1 - exp(-(m/m_P)^2); m in internal mass units
/// (electron masses in the default system).
double mass_decoherence_scaling(double m, const PhysicsContext& ctx);

}  // namespace ghostsim

#endif  // GHOSTSIM_INTEGRALS_HPP
