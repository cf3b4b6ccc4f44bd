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

#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ghostsim {

void CutoffPair::validate() const {
  if (!(k_min > 0.0) || !std::isfinite(k_min)) {
    throw std::domain_error("CutoffPair: k_min must be finite and strictly positive");
  }
  if (!(k_max > k_min) || !std::isfinite(k_max)) {
    throw std::domain_error("CutoffPair: k_max must be finite and exceed k_min");
  }
}

RadialModeGrid RadialModeGrid::log_uniform(const CutoffPair& cutoffs, std::size_t nodes) {
  cutoffs.validate();
  if (nodes < 2) {
    throw std::domain_error("RadialModeGrid: need at least two nodes");
  }
  const double t0 = std::log(cutoffs.k_min);
  const double t1 = std::log(cutoffs.k_max);
  const double h = (t1 - t0) / static_cast<double>(nodes - 1);

  RadialModeGrid grid;
  grid.ks_.resize(nodes);
  grid.ws_.resize(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    grid.ks_[i] = std::exp(t0 + h * static_cast<double>(i));
  }
  // Pin the endpoints so the grid covers [k_min, k_max] exactly.
  grid.ks_.front() = cutoffs.k_min;
  grid.ks_.back() = cutoffs.k_max;
  // Trapezoid in t with dk = k dt.
  for (std::size_t i = 0; i < nodes; ++i) {
    const double wt = (i == 0 || i + 1 == nodes) ? 0.5 * h : h;
    grid.ws_[i] = wt * grid.ks_[i];
  }
  return grid;
}

bool RadialModeGrid::covers(const CutoffPair& cutoffs) const {
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
  };
  return close(k_min(), cutoffs.k_min) && close(k_max(), cutoffs.k_max);
}

}  // namespace ghostsim
