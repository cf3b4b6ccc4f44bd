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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "coupling.hpp"
#include "geometry.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"
#include "units.hpp"

using namespace ghostsim;
using oracles::rel_err;

TEST_CASE("natural units fix the constants") {
  const PhysicsContext ctx = PhysicsContext::natural();
  CHECK(ctx.alpha == 7.2973525693e-3);
  CHECK(ctx.hbar == 1.0);
  CHECK(ctx.c == 1.0);
  CHECK(ctx.eps0 == 1.0);
  CHECK(ctx.r0 == 1.0);
  // e = sqrt(4 pi alpha), Q_P = sqrt(4 pi), 40-digit reference values.
  CHECK(rel_err(ctx.e_charge, 0.30282212087208875208) < 1e-15);
  CHECK(rel_err(ctx.planck_charge, 3.5449077018110320546) < 1e-15);
  // (e / Q_P)^2 = alpha by construction.
  const double ratio = ctx.e_charge / ctx.planck_charge;
  CHECK(rel_err(ratio * ratio, ctx.alpha) < 1e-14);
  // Planck mass in electron masses from the CODATA mass ratio.
  CHECK(rel_err(ctx.planck_mass, 2.3892220059207920939e22) < 1e-12);
}

TEST_CASE("explicit unit overrides keep the invariants") {
  const PhysicsContext ctx = PhysicsContext::with(7.2973525693e-3, 2.0, 3.0, 5.0, 7.0);
  CHECK(ctx.hbar == 2.0);
  CHECK(ctx.c == 3.0);
  CHECK(ctx.eps0 == 5.0);
  CHECK(ctx.r0 == 7.0);
  // alpha = e^2 / (4 pi eps0 hbar c) must hold in any unit system.
  const double alpha_back =
      ctx.e_charge * ctx.e_charge / (4.0 * kPi * ctx.eps0 * ctx.hbar * ctx.c);
  CHECK(rel_err(alpha_back, ctx.alpha) < 1e-14);
  const double ratio = ctx.e_charge / ctx.planck_charge;
  CHECK(rel_err(ratio * ratio, ctx.alpha) < 1e-14);

  CHECK_THROWS_AS(PhysicsContext::with(0.0, 1, 1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(PhysicsContext::with(7.3e-3, -1, 1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(PhysicsContext::with(7.3e-3, 1, 1, 0, 1), std::domain_error);
}

TEST_CASE("position and wave vector algebra") {
  const Position3 a{1.0, -2.0, 3.0};
  const Position3 b{0.5, 4.0, -1.0};
  const Position3 d = a - b;
  CHECK(d.x == 0.5);
  CHECK(d.y == -6.0);
  CHECK(d.z == 4.0);
  CHECK((a + b).y == 2.0);
  CHECK((2.0 * a).z == 6.0);
  CHECK(a.dot(b) == 1.0 * 0.5 - 2.0 * 4.0 + 3.0 * -1.0);
  CHECK(rel_err(d.norm(), std::sqrt(0.25 + 36.0 + 16.0)) < 1e-15);

  const WaveVector kv{3.0, 0.0, 4.0};
  CHECK(kv.k() == 5.0);
  const PhysicsContext ctx = PhysicsContext::natural();
  CHECK(kv.omega(ctx) == 5.0);
  CHECK(kv.dot(a) == 3.0 + 12.0);

  const SeparationGeometry geom{a, b};
  CHECK(geom.delta_r() == d.norm());
}

TEST_CASE("mode coupling reproduces the frozen reference and scalings") {
  const PhysicsContext ctx = PhysicsContext::natural();
  // g(k = 1/r0, q = e) = e sqrt(1 / (2 (2 pi)^3)), 40-digit reference.
  CHECK(rel_err(mode_coupling(1.0, 1.0, ctx), 0.013595738300814438197) < 1e-15);
  // Linear in q, k^{-1/2} in wavenumber: g(4k) = g(k) / 2.
  const double g1 = mode_coupling(0.37, 1.0, ctx);
  CHECK(rel_err(mode_coupling(0.37, 2.5, ctx), 2.5 * g1) < 1e-15);
  CHECK(rel_err(mode_coupling(4.0 * 0.37, 1.0, ctx), 0.5 * g1) < 1e-14);
  CHECK(mode_coupling(1.0, 0.0, ctx) == 0.0);
  CHECK_THROWS_AS(mode_coupling(0.0, 1.0, ctx), std::domain_error);
  CHECK_THROWS_AS(mode_coupling(-1.0, 1.0, ctx), std::domain_error);
}

TEST_CASE("coherent amplitude of static charges") {
  const PhysicsContext ctx = PhysicsContext::natural();
  const WaveVector kv{0.3, -0.2, 0.6};
  const double k = kv.k();

  SUBCASE("single charge at the origin is real and negative frequency free") {
    const std::vector<PointCharge> one = {{{0.0, 0.0, 0.0}, 1.0}};
    const std::complex<double> amp = coherent_amplitude(kv, one, ctx);
    CHECK(amp.imag() == 0.0);
    CHECK(rel_err(amp.real(), mode_coupling(k, 1.0, ctx) / k) < 1e-15);
  }

  SUBCASE("displacing a charge only rotates the phase") {
    const std::vector<PointCharge> here = {{{0.0, 0.0, 0.0}, 1.0}};
    const std::vector<PointCharge> there = {{{1.0, 2.0, -0.5}, 1.0}};
    const std::complex<double> a0 = coherent_amplitude(kv, here, ctx);
    const std::complex<double> a1 = coherent_amplitude(kv, there, ctx);
    CHECK(rel_err(std::abs(a1), std::abs(a0)) < 1e-14);
    const double expected_phase = -kv.dot(Position3{1.0, 2.0, -0.5});
    CHECK(rel_err(std::arg(a1 / a0), std::remainder(expected_phase, 2.0 * kPi)) < 1e-12);
  }

  SUBCASE("opposite charges at one point cancel exactly") {
    const std::vector<PointCharge> pair = {{{0.7, 0.1, -0.4}, 2.0}, {{0.7, 0.1, -0.4}, -2.0}};
    const std::complex<double> amp = coherent_amplitude(kv, pair, ctx);
    CHECK(std::abs(amp) == 0.0);
  }

  SUBCASE("mean photons is the squared modulus") {
    const ChargeConfiguration cfg{{{{0.4, 0.0, 0.0}, 1.0}, {{-0.4, 0.0, 0.0}, 1.0}}, "pair"};
    const std::complex<double> amp = coherent_amplitude(kv, cfg, ctx);
    CHECK(rel_err(mode_mean_photons(kv, cfg, ctx), std::norm(amp)) < 1e-15);
  }

  SUBCASE("zero wave vector is rejected") {
    const std::vector<PointCharge> one = {{{0.0, 0.0, 0.0}, 1.0}};
    CHECK_THROWS_AS(coherent_amplitude(WaveVector{0.0, 0.0, 0.0}, one, ctx),
                    std::domain_error);
  }
}

TEST_CASE("log-uniform grid covers the window and integrates exactly in ln k") {
  const CutoffPair cutoffs{1e-6, 1.0};
  const RadialModeGrid grid = RadialModeGrid::log_uniform(cutoffs, 2048);
  CHECK(grid.size() == 2048);
  CHECK(grid.k_min() == cutoffs.k_min);
  CHECK(grid.k_max() == cutoffs.k_max);
  CHECK(grid.covers(cutoffs));
  CHECK(grid.scheme() == "log-trapezoid");

  // Trapezoid in t = ln k integrates f(k) = 1/k exactly: the weights resum
  // to (nodes - 1) h = ln(k_max / k_min).
  const double log_measure = grid.integrate([](double k) { return 1.0 / k; });
  CHECK(rel_err(log_measure, std::log(1e6)) < 1e-13);

  // Smooth integrand converges at O(h^2): integral of k dk.
  const double linear = grid.integrate([](double k) { return k; });
  const double exact = 0.5 * (1.0 - 1e-12);
  CHECK(rel_err(linear, exact) < 1e-4);

  CHECK_THROWS_AS(RadialModeGrid::log_uniform(cutoffs, 1), std::domain_error);
  CHECK_THROWS_AS(RadialModeGrid::log_uniform(CutoffPair{0.0, 1.0}, 16), std::domain_error);
  CHECK_THROWS_AS(RadialModeGrid::log_uniform(CutoffPair{1.0, 0.5}, 16), std::domain_error);
  CHECK_FALSE(grid.covers(CutoffPair{1e-5, 1.0}));
}
