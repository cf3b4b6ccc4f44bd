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

#include "units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghostsim {

PhysicsContext PhysicsContext::natural() {
  return with(codata::kFineStructure, 1.0, 1.0, 1.0, 1.0);
}

PhysicsContext PhysicsContext::with(double alpha, double hbar, double c, double eps0,
                                    double r0) {
  PhysicsContext ctx{};
  ctx.alpha = alpha;
  ctx.hbar = hbar;
  ctx.c = c;
  ctx.eps0 = eps0;
  ctx.r0 = r0;
  // Gaussian-rationalized convention: e^2 = 4 pi eps0 hbar c alpha.
  ctx.e_charge = std::sqrt(4.0 * kPi * eps0 * hbar * c * alpha);
  ctx.planck_charge = std::sqrt(4.0 * kPi * eps0 * hbar * c);
  // Mass unit is the electron mass; r0 = hbar/(m_e c) fixes m_e internally.
  const double electron_mass = hbar / (c * r0);
  ctx.planck_mass = (codata::kPlanckMassKg / codata::kElectronMassKg) * electron_mass;
  ctx.validate();
  return ctx;
}

void PhysicsContext::validate() const {
  const double values[] = {alpha, hbar, c, eps0, e_charge, planck_charge, planck_mass, r0};
  const char* names[] = {"alpha", "hbar", "c", "eps0", "e_charge", "planck_charge",
                         "planck_mass", "r0"};
  for (int i = 0; i < 8; ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw std::domain_error(std::string("PhysicsContext: ") + names[i] +
                              " must be finite and strictly positive");
    }
  }
  const double ratio = (e_charge / planck_charge) * (e_charge / planck_charge);
  if (std::abs(ratio - alpha) > 1e-12 * alpha) {
    throw std::domain_error("PhysicsContext: (e/Q_P)^2 deviates from alpha");
  }
}

}  // namespace ghostsim
