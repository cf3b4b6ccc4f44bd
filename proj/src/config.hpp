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

#ifndef GHOSTSIM_CONFIG_HPP
#define GHOSTSIM_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "geometry.hpp"
#include "quadrature.hpp"
#include "tomography.hpp"
#include "units.hpp"

namespace ghostsim {

/// Single superposed charge: branch positions, charge, and mode grid inputs.
struct SingleChargeSetup {
  SeparationGeometry geometry;
  double charge = 1.0;
  CutoffPair cutoffs;
  std::size_t grid_nodes = RadialModeGrid::kDefaultNodes;
};

enum class SweepAxis { kDeltaR, kCharge, kKMax, kKMin, kMass };
enum class Spacing { kLinear, kLog };
enum class OutputFormat { kCsv, kJson, kBoth };

const char* sweep_axis_name(SweepAxis axis);

/// One-dimensional parameter sweep over the configured setup.
struct SweepSettings {
  SweepAxis axis = SweepAxis::kDeltaR;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  Spacing spacing = Spacing::kLinear;
  std::string output_base;  ///< .csv / .json appended per format
  OutputFormat format = OutputFormat::kCsv;

  /// count >= 2, min < max, log spacing needs min > 0, nonempty output.
  void validate() const;

  /// The axis value at grid point i (i < count), deterministically spaced.
  double value_at(std::size_t i) const;
};

/// Everything a run needs, parsed from one config file.
struct RunConfig {
  PhysicsContext ctx = PhysicsContext::natural();
  std::optional<SingleChargeSetup> geometry;
  std::optional<tomography::TomographyScenario> scenario;
  std::optional<SweepSettings> sweep;
};

/// Parses the INI-style config grammar:
///   - sections [units], [geometry], [scenario], [sweep]
///   - key = value entries; positions are three whitespace-separated floats
///   - full-line comments start with '#' or ';'
/// Unknown sections, unknown keys, duplicate keys, and malformed values are
/// all ConfigError with the origin and line number. Scenario geometry is
/// validated strictly here (distinct positions, L/R partition).
RunConfig parse_config(std::string_view text, const std::string& origin);

/// Reads and parses a config file; IoError when unreadable.
RunConfig load_config(const std::string& path);

}  // namespace ghostsim

#endif  // GHOSTSIM_CONFIG_HPP
