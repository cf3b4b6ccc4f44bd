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

#ifndef GHOSTSIM_UNITS_HPP
#define GHOSTSIM_UNITS_HPP

namespace ghostsim {

namespace codata {
// CODATA 2018 values.
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kPlanckMassKg = 2.176434e-8;
inline constexpr double kElectronMassKg = 9.1093837015e-31;
// Reduced Compton wavelength of the electron, metres. Quoted for reporting;
// internally the Compton wavelength is the length unit itself.
inline constexpr double kElectronComptonWavelengthM = 3.8615926796e-13;
}  // namespace codata

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Unit system and physical constants shared by every computation.
///
/// The internal system is natural: hbar = c = eps0 = 1, lengths measured in
/// r0 (by default the electron's reduced Compton wavelength), charges in
/// units of the elementary charge, masses in electron masses. In that system
/// e = sqrt(4 pi alpha) and the Planck charge is sqrt(4 pi), so
/// (e / planck_charge)^2 = alpha holds by construction.
struct PhysicsContext {
  double alpha;          ///< fine-structure constant (dimensionless)
  double hbar;           ///< reduced Planck constant, internal units
  double c;              ///< speed of light, internal units
  double eps0;           ///< vacuum permittivity, internal units
  double e_charge;       ///< elementary charge, internal units
  double planck_charge;  ///< charge with (e/Q_P)^2 = alpha
  double planck_mass;    ///< Planck mass, internal units
  double r0;             ///< reference length (Compton wavelength), internal units

  /// Default natural-unit context (hbar = c = eps0 = r0 = 1, CODATA alpha).
  static PhysicsContext natural();

  /// Context with explicit overrides. Derived constants are recomputed so the
  /// invariants hold in any consistent unit system. Throws std::domain_error
  /// on nonpositive inputs.
  static PhysicsContext with(double alpha, double hbar, double c, double eps0, double r0);

  /// Throws std::domain_error if any invariant is violated.
  void validate() const;
};

}  // namespace ghostsim

#endif  // GHOSTSIM_UNITS_HPP
