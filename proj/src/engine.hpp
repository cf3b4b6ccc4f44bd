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

#ifndef GHOSTSIM_ENGINE_HPP
#define GHOSTSIM_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace ghostsim::engine {

/// One evaluated point. Single-charge points are reported through the
/// equivalent reference-free tomography reading (zero reference charge:
/// conditional exchange value equals the visibility, subspace weight 1/2).
/// Mass-axis points report the gravitational scaling analogue, with the
/// geometry fields zeroed. visibility = exp(-photon_number/2) always.
struct ResultRecord {
  double delta_r = 0.0;           ///< probe branch separation, r0
  double charge = 0.0;            ///< probe charge, e
  double mass = 0.0;              ///< mass-axis value, electron masses
  double k_min = 0.0;             ///< IR cutoff, 1/r0
  double k_max = 0.0;             ///< UV cutoff, 1/r0
  double grid_nodes = 0.0;        ///< quadrature nodes (integral value)
  double interaction_time = 0.0;  ///< Coulomb-phase hold time
  double photon_number = 0.0;     ///< scalar photons separating the branches
  double visibility = 1.0;
  double c_rl_conditional = 1.0;  ///< exchange expectation on the RL/LR subspace
  double subspace_weight = 0.5;
  double entropy_bits = 0.0;      ///< probe-field entanglement entropy
  double decoherence_scale = 0.0;  ///< 1 - exp(-(Q/Q_P)^2) or mass analogue

  /// All fields finite and visibility in (0, 1]; NumericalCheckError
  /// otherwise (an underflowing visibility means the requested range left
  /// double precision).
  void validate() const;
};

std::string csv_header();
std::string csv_row(const ResultRecord& record);

struct SweepSummary {
  std::string axis;
  std::size_t count = 0;
  std::optional<double> slope_n_vs_ln_delta_r;  ///< delta_r axis only
  std::optional<double> expected_slope;         ///< (2 alpha/pi) q^2, single charge
  std::vector<std::string> files_written;
};

struct SweepResult {
  std::vector<ResultRecord> records;
  SweepSummary summary;
};

/// Evaluates the configured sweep with a bounded worker pool (capped by
/// GHOSTSIM_THREADS) and writes CSV/JSON outputs in input order, so repeated
/// runs are byte-identical. Requires cfg.sweep plus [geometry] or [scenario]
/// (neither for the mass axis).
SweepResult run_sweep(const RunConfig& cfg);

std::string render_sweep_summary(const SweepSummary& summary);

/// Single tomography evaluation; requires cfg.scenario.
ResultRecord evaluate_scenario(const RunConfig& cfg);

/// Detection-threshold quantities for the configured single-charge
/// geometry. Unbounded (no finite threshold) when the configured charge or
/// separation makes the photon number vanish identically.
struct ThresholdSummary {
  double delta_r = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  std::size_t grid_nodes = 0;
  double configured_charge = 0.0;
  double n_configured = 0.0;
  bool bounded = false;
  double n_unit = 0.0;                   ///< n at Q = 1 e
  double q_star_n1 = 0.0;                ///< Q with n(Q) = 1, in e
  double q_star_half_visibility = 0.0;   ///< Q with visibility(Q) = 1/2, in e
  double n_at_137 = 0.0;
  double visibility_at_137 = 0.0;
};

/// Requires cfg.geometry.
ThresholdSummary compute_threshold(const RunConfig& cfg);

std::string render_threshold_report(const ThresholdSummary& summary, double alpha);

/// compute_threshold + render, in one call.
std::string threshold_report(const RunConfig& cfg);

struct VerifyOptions {
  int fock_levels = 64;
  /// > 0 overrides every check's documented tolerance except the exact
  /// (zero-tolerance) sign and involution checks.
  double tol_override = 0.0;
};

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  int fock_levels = 0;

  bool all_passed() const;
};

/// Runs the Fock-space oracle suite: displacement norms and moments, closed
/// form vs brute-force overlaps, ladder algebra, metric structure, norm
/// signs, supplementary-condition residuals, driven-oscillator scaling.
/// Deterministic (fixed seed). Throws TruncationError when fock_levels is
/// too small for the sampled amplitudes.
VerifyReport run_verification(const VerifyOptions& options);

std::string render_verify_report(const VerifyReport& report);

}  // namespace ghostsim::engine

#endif  // GHOSTSIM_ENGINE_HPP
