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

#ifndef GHOSTSIM_GEOMETRY_HPP
#define GHOSTSIM_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "units.hpp"

namespace ghostsim {

/// Point in space, coordinates in units of r0.
struct Position3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Position3 operator-(const Position3& a, const Position3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Position3 operator+(const Position3& a, const Position3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Position3 operator*(double s, const Position3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }

  double dot(const Position3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }

  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

/// Field mode wave vector, components in units of 1/r0. The zero mode is
/// excluded: every consumer requires k = |kvec| > 0.
struct WaveVector {
  double kx = 0.0;
  double ky = 0.0;
  double kz = 0.0;

  double k() const { return std::sqrt(kx * kx + ky * ky + kz * kz); }
  double omega(const PhysicsContext& ctx) const { return ctx.c * k(); }
  double dot(const Position3& r) const { return kx * r.x + ky * r.y + kz * r.z; }
};

/// Two branch locations of a superposed charge.
struct SeparationGeometry {
  Position3 r_a;
  Position3 r_b;

  double delta_r() const { return (r_a - r_b).norm(); }
};

/// One point charge; q in units of the elementary charge.
struct PointCharge {
  Position3 position;
  double q = 1.0;
};

/// A static configuration of point charges.
struct ChargeConfiguration {
  std::vector<PointCharge> charges;
  std::string label;

  /// Throws std::domain_error unless there is at least one charge, every
  /// charge is nonzero, and every position is finite.
  void validate() const {
    if (charges.empty()) {
      throw std::domain_error("ChargeConfiguration '" + label + "': needs at least one charge");
    }
    for (const auto& ch : charges) {
      if (!(std::abs(ch.q) > 0.0) || !std::isfinite(ch.q)) {
        throw std::domain_error("ChargeConfiguration '" + label + "': charges must be nonzero");
      }
      if (!ch.position.finite()) {
        throw std::domain_error("ChargeConfiguration '" + label + "': positions must be finite");
      }
    }
  }
};

}  // namespace ghostsim

#endif  // GHOSTSIM_GEOMETRY_HPP
