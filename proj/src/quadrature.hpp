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

#ifndef GHOSTSIM_QUADRATURE_HPP
#define GHOSTSIM_QUADRATURE_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ghostsim {

/// Infrared and ultraviolet wavenumber cutoffs, in units of 1/r0.
struct CutoffPair {
  double k_min = 1e-6;
  double k_max = 1.0;

  /// Throws std::domain_error unless 0 < k_min < k_max.
  void validate() const;
};

/// Radial quadrature grid over [k_min, k_max]: composite trapezoid rule on a
/// log-uniform node layout, which resolves integrands varying like 1/k over
/// many decades. Nodes are strictly increasing, weights strictly positive,
/// and the endpoints coincide with the cutoffs exactly.
class RadialModeGrid {
 public:
  static constexpr std::size_t kDefaultNodes = 2048;

  static RadialModeGrid log_uniform(const CutoffPair& cutoffs,
                                    std::size_t nodes = kDefaultNodes);

  std::span<const double> nodes() const { return ks_; }
  std::span<const double> weights() const { return ws_; }
  std::size_t size() const { return ks_.size(); }
  double k_min() const { return ks_.front(); }
  double k_max() const { return ks_.back(); }
  std::string_view scheme() const { return "log-trapezoid"; }

  /// True when the grid spans exactly the given cutoffs (relative 1e-12).
  bool covers(const CutoffPair& cutoffs) const;

  /// Integral of f(k) dk over [k_min, k_max] with the grid's rule.
  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < ks_.size(); ++i) {
      acc += ws_[i] * f(ks_[i]);
    }
    return acc;
  }

 private:
  RadialModeGrid() = default;
  std::vector<double> ks_;
  std::vector<double> ws_;
};

}  // namespace ghostsim

#endif  // GHOSTSIM_QUADRATURE_HPP
