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

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "config.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "units.hpp"

using namespace ghostsim;
using oracles::rel_err;

namespace {

RunConfig parse(const std::string& text) { return parse_config(text, "test.ini"); }

/// Message of the ConfigError thrown by f; empty when nothing was thrown.
template <class F>
std::string config_error_of(F&& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("config: empty input yields natural units and no run sections") {
  const RunConfig cfg = parse("");
  CHECK(cfg.ctx.alpha == PhysicsContext::natural().alpha);
  CHECK(cfg.ctx.hbar == 1.0);
  CHECK(!cfg.geometry.has_value());
  CHECK(!cfg.scenario.has_value());
  CHECK(!cfg.sweep.has_value());
}

TEST_CASE("config: minimal geometry section fills in the defaults") {
  const RunConfig cfg = parse(
      "# single-charge setup\n"
      "[geometry]\n"
      "r_a = 0 0 0\n"
      "; reference branch\n"
      "r_b = 100 0 0\n");
  REQUIRE(cfg.geometry.has_value());
  const SingleChargeSetup& setup = *cfg.geometry;
  CHECK(setup.geometry.r_a.x == 0.0);
  CHECK(setup.geometry.r_b.x == 100.0);
  CHECK(setup.geometry.delta_r() == 100.0);
  CHECK(setup.charge == 1.0);
  CHECK(setup.cutoffs.k_min == 1e-6);
  CHECK(setup.cutoffs.k_max == 1.0);
  CHECK(setup.grid_nodes == RadialModeGrid::kDefaultNodes);
  CHECK(!cfg.scenario.has_value());
  CHECK(!cfg.sweep.has_value());
}

TEST_CASE("config: geometry overrides and rejects") {
  SUBCASE("explicit values") {
    const RunConfig cfg = parse(
        "[geometry]\n"
        "r_a = -1.5 2 0.25\n"
        "r_b = 3 0 0\n"
        "charge = 2.5\n"
        "k_min = 1e-4\n"
        "k_max = 10\n"
        "grid_nodes = 256\n");
    const SingleChargeSetup& setup = *cfg.geometry;
    CHECK(setup.geometry.r_a.y == 2.0);
    CHECK(setup.geometry.r_a.z == 0.25);
    CHECK(setup.charge == 2.5);
    CHECK(setup.cutoffs.k_min == 1e-4);
    CHECK(setup.cutoffs.k_max == 10.0);
    CHECK(setup.grid_nodes == 256);
  }
  SUBCASE("missing required position") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 0 0 0\n");
    });
    CHECK(contains(msg, "section [geometry] is missing required key 'r_b'"));
  }
  SUBCASE("inverted cutoffs") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\nk_min = 2\nk_max = 1\n");
    });
    CHECK(contains(msg, "section [geometry]"));
  }
  SUBCASE("single-node grid") {
    CHECK_THROWS_AS(parse("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\ngrid_nodes = 1\n"),
                    ConfigError);
  }
}

TEST_CASE("config: units overrides rebuild the derived charges") {
  SUBCASE("alpha alone") {
    const RunConfig cfg = parse("[units]\nalpha = 0.01\n");
    CHECK(cfg.ctx.alpha == 0.01);
    const double e2 = cfg.ctx.e_charge * cfg.ctx.e_charge;
    CHECK(rel_err(e2, 4.0 * kPi * 0.01) < 1e-14);
  }
  SUBCASE("full override keeps alpha = e^2 / (4 pi eps0 hbar c)") {
    const RunConfig cfg = parse(
        "[units]\nalpha = 0.005\nhbar = 2\nc = 3\neps0 = 5\nr0 = 7\n");
    CHECK(cfg.ctx.hbar == 2.0);
    CHECK(cfg.ctx.c == 3.0);
    CHECK(cfg.ctx.eps0 == 5.0);
    CHECK(cfg.ctx.r0 == 7.0);
    const double alpha_back =
        cfg.ctx.e_charge * cfg.ctx.e_charge / (4.0 * kPi * cfg.ctx.eps0 * cfg.ctx.hbar * cfg.ctx.c);
    CHECK(rel_err(alpha_back, 0.005) < 1e-14);
  }
  SUBCASE("nonpositive constant") {
    const std::string msg = config_error_of([] { parse("[units]\nalpha = 0\n"); });
    CHECK(contains(msg, "section [units]"));
  }
}

TEST_CASE("config: scenario section parses and validates the partition") {
  const std::string base =
      "[scenario]\n"
      "r_al = -50 0 0\n"
      "r_ar = 50 0 0\n"
      "r_bl = -50 40 0\n"
      "r_br = 50 40 0\n";

  SUBCASE("defaults") {
    const RunConfig cfg = parse(base);
    REQUIRE(cfg.scenario.has_value());
    const auto& scn = *cfg.scenario;
    CHECK(scn.r_al.x == -50.0);
    CHECK(scn.r_br.y == 40.0);
    CHECK(scn.q_a == 1.0);
    CHECK(scn.q_b == 1.0);
    CHECK(scn.interaction_time == 0.0);
    CHECK(scn.cutoffs.k_min == 1e-6);
    CHECK(scn.grid.size() == RadialModeGrid::kDefaultNodes);
    CHECK(scn.grid.covers(scn.cutoffs));
  }
  SUBCASE("explicit values") {
    const RunConfig cfg = parse(base +
                                "q_a = 2\nq_b = -1\nk_min = 1e-5\nk_max = 2\n"
                                "grid_nodes = 512\ninteraction_time = 150\n");
    const auto& scn = *cfg.scenario;
    CHECK(scn.q_a == 2.0);
    CHECK(scn.q_b == -1.0);
    CHECK(scn.interaction_time == 150.0);
    CHECK(scn.grid.size() == 512);
    CHECK(scn.grid.k_min() == 1e-5);
    CHECK(scn.grid.k_max() == 2.0);
  }
  SUBCASE("custom partition plane") {
    const RunConfig cfg = parse(
        "[scenario]\n"
        "r_al = 0 -1 0\nr_ar = 0 2 0\nr_bl = 1 -3 0\nr_br = 1 4 0\n"
        "partition_normal = 0 1 0\npartition_offset = 0\n");
    CHECK(cfg.scenario.has_value());
  }
  SUBCASE("branch on the wrong side of the default partition") {
    const std::string msg = config_error_of([] {
      parse("[scenario]\nr_al = 2 0 0\nr_ar = 50 0 0\nr_bl = -50 40 0\nr_br = 50 40 0\n");
    });
    CHECK(contains(msg, "section [scenario]"));
    CHECK(contains(msg, "Left-branch position lies on the Right side"));
  }
  SUBCASE("coincident positions") {
    const std::string msg = config_error_of([] {
      parse("[scenario]\nr_al = -50 0 0\nr_ar = 50 0 0\nr_bl = -50 0 0\nr_br = 50 40 0\n");
    });
    CHECK(contains(msg, "coincide"));
  }
  SUBCASE("negative interaction time") {
    const std::string msg =
        config_error_of([&] { parse(base + "interaction_time = -1\n"); });
    CHECK(contains(msg, "section [scenario]"));
    CHECK(contains(msg, "interaction time"));
  }
  SUBCASE("missing position") {
    const std::string msg = config_error_of([] {
      parse("[scenario]\nr_al = -50 0 0\nr_ar = 50 0 0\nr_bl = -50 40 0\n");
    });
    CHECK(contains(msg, "section [scenario] is missing required key 'r_br'"));
  }
}

TEST_CASE("config: sweep section parses axes, spacing, and format") {
  const std::string geometry =
      "[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\n";

  SUBCASE("full specification") {
    const RunConfig cfg = parse(geometry +
                                "[sweep]\naxis = delta_r\nmin = 10\nmax = 1e5\ncount = 50\n"
                                "spacing = log\noutput = out/run\nformat = both\n");
    REQUIRE(cfg.sweep.has_value());
    const SweepSettings& sweep = *cfg.sweep;
    CHECK(sweep.axis == SweepAxis::kDeltaR);
    CHECK(sweep.min == 10.0);
    CHECK(sweep.max == 1e5);
    CHECK(sweep.count == 50);
    CHECK(sweep.spacing == Spacing::kLog);
    CHECK(sweep.format == OutputFormat::kBoth);
    CHECK(sweep.output_base == "out/run");
  }
  SUBCASE("defaults are linear spacing and csv format") {
    const RunConfig cfg = parse(geometry +
                                "[sweep]\naxis = charge\nmin = 1\nmax = 10\ncount = 10\n"
                                "output = out/q\n");
    CHECK(cfg.sweep->spacing == Spacing::kLinear);
    CHECK(cfg.sweep->format == OutputFormat::kCsv);
  }
  SUBCASE("every axis name round-trips") {
    const char* names[] = {"delta_r", "charge", "k_max", "k_min", "mass"};
    for (const char* name : names) {
      const RunConfig cfg = parse(geometry + "[sweep]\naxis = " + name +
                                  "\nmin = 1\nmax = 2\ncount = 2\noutput = out/x\n");
      CHECK(sweep_axis_name(cfg.sweep->axis) == std::string(name));
    }
  }
  SUBCASE("unknown axis") {
    const std::string msg = config_error_of([&] {
      parse(geometry + "[sweep]\naxis = radius\nmin = 1\nmax = 2\ncount = 2\noutput = o\n");
    });
    CHECK(contains(msg, "axis must be one of delta_r|charge|k_max|k_min|mass"));
  }
  SUBCASE("unknown spacing") {
    const std::string msg = config_error_of([&] {
      parse(geometry +
            "[sweep]\naxis = charge\nmin = 1\nmax = 2\ncount = 2\noutput = o\nspacing = geo\n");
    });
    CHECK(contains(msg, "spacing must be linear|log"));
  }
  SUBCASE("unknown format") {
    const std::string msg = config_error_of([&] {
      parse(geometry +
            "[sweep]\naxis = charge\nmin = 1\nmax = 2\ncount = 2\noutput = o\nformat = xml\n");
    });
    CHECK(contains(msg, "format must be csv|json|both"));
  }
  SUBCASE("count below two") {
    const std::string msg = config_error_of([&] {
      parse(geometry + "[sweep]\naxis = charge\nmin = 1\nmax = 2\ncount = 1\noutput = o\n");
    });
    CHECK(contains(msg, "section [sweep]"));
    CHECK(contains(msg, "sweep count must be at least 2"));
  }
  SUBCASE("inverted range") {
    const std::string msg = config_error_of([&] {
      parse(geometry + "[sweep]\naxis = charge\nmin = 2\nmax = 2\ncount = 3\noutput = o\n");
    });
    CHECK(contains(msg, "min < max"));
  }
  SUBCASE("log spacing needs a positive minimum") {
    const std::string msg = config_error_of([&] {
      parse(geometry +
            "[sweep]\naxis = charge\nmin = 0\nmax = 2\ncount = 3\noutput = o\nspacing = log\n");
    });
    CHECK(contains(msg, "log spacing requires min > 0"));
  }
  SUBCASE("missing output") {
    const std::string msg = config_error_of([&] {
      parse(geometry + "[sweep]\naxis = charge\nmin = 1\nmax = 2\ncount = 3\n");
    });
    CHECK(contains(msg, "section [sweep] is missing required key 'output'"));
  }
}

TEST_CASE("config: sweep grid values are deterministic") {
  SweepSettings sweep;
  sweep.min = 0.0;
  sweep.max = 1.0;
  sweep.count = 5;
  sweep.output_base = "o";

  SUBCASE("linear endpoints and midpoints are exact") {
    CHECK(sweep.value_at(0) == 0.0);
    CHECK(sweep.value_at(1) == 0.25);
    CHECK(sweep.value_at(2) == 0.5);
    CHECK(sweep.value_at(4) == 1.0);
  }
  SUBCASE("log spacing is geometric with pinned endpoints") {
    sweep.min = 1e-2;
    sweep.max = 1e2;
    sweep.spacing = Spacing::kLog;
    CHECK(sweep.value_at(0) == 1e-2);
    CHECK(rel_err(sweep.value_at(1), 1e-1) < 1e-13);
    CHECK(rel_err(sweep.value_at(2), 1.0) < 1e-13);
    CHECK(rel_err(sweep.value_at(4), 1e2) < 1e-13);
    sweep.count = 9;
    const double ratio = sweep.value_at(1) / sweep.value_at(0);
    for (std::size_t i = 1; i + 1 < sweep.count; ++i) {
      CHECK(rel_err(sweep.value_at(i + 1) / sweep.value_at(i), ratio) < 1e-12);
    }
  }
  SUBCASE("validate rejects a bad programmatic range") {
    sweep.min = 2.0;
    sweep.max = 1.0;
    CHECK_THROWS_AS(sweep.validate(), std::domain_error);
  }
}

TEST_CASE("config: grammar errors carry origin and line") {
  SUBCASE("unknown key reports its exact location") {
    try {
      parse_config("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\nfoo = 1\n", "bad.ini");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.origin() == "bad.ini");
      CHECK(e.line() == 4);
      CHECK(contains(e.what(), "bad.ini:4: unknown key 'foo' in section [geometry]"));
    }
  }
  SUBCASE("duplicate key points at the first definition") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\ncharge = 1\ncharge = 2\nr_a = 0 0 0\nr_b = 1 0 0\n");
    });
    CHECK(contains(msg, "duplicate key 'charge' in section [geometry]"));
    CHECK(contains(msg, "(first at line 2)"));
  }
  SUBCASE("entry before any section") {
    const std::string msg = config_error_of([] { parse("charge = 1\n"); });
    CHECK(contains(msg, "entry before any [section] header"));
  }
  SUBCASE("malformed section header") {
    const std::string msg = config_error_of([] { parse("[geometry\n"); });
    CHECK(contains(msg, "malformed section header"));
  }
  SUBCASE("unknown section") {
    const std::string msg = config_error_of([] { parse("[fields]\n"); });
    CHECK(contains(msg, "unknown section [fields]"));
  }
  SUBCASE("line without an equals sign") {
    const std::string msg = config_error_of([] { parse("[geometry]\ncharge input\n"); });
    CHECK(contains(msg, "expected 'key = value'"));
  }
  SUBCASE("position with too few components") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 1 2\nr_b = 0 0 0\n");
    });
    CHECK(contains(msg, "expects three whitespace-separated floats"));
  }
  SUBCASE("position with trailing content") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 1 2 3 4\nr_b = 0 0 0\n");
    });
    CHECK(contains(msg, "has trailing content '4'"));
  }
  SUBCASE("number out of range") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\ncharge = 1e999\n");
    });
    CHECK(contains(msg, "expects a finite number"));
  }
  SUBCASE("nan value") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\ncharge = nan\n");
    });
    CHECK(contains(msg, "expects a finite number"));
  }
  SUBCASE("fractional node count") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\ngrid_nodes = 12.5\n");
    });
    CHECK(contains(msg, "expects a nonnegative integer"));
  }
  SUBCASE("comments are full-line only") {
    const std::string msg = config_error_of([] {
      parse("[geometry]\nr_a = 0 0 0\nr_b = 1 0 0\ncharge = 1 # inline\n");
    });
    CHECK(contains(msg, "expects a finite number"));
  }
  SUBCASE("section header tolerates surrounding spaces") {
    const RunConfig cfg = parse("[ geometry ]\nr_a = 0 0 0\nr_b = 1 0 0\n");
    CHECK(cfg.geometry.has_value());
  }
}

TEST_CASE("config: load_config reads files and reports IO failures") {
  SUBCASE("file round trip") {
    const std::string path = "test_config_tmp.ini";
    {
      std::ofstream out(path);
      out << "[geometry]\nr_a = 0 0 0\nr_b = 42 0 0\ncharge = 3\n";
    }
    const RunConfig cfg = load_config(path);
    REQUIRE(cfg.geometry.has_value());
    CHECK(cfg.geometry->geometry.delta_r() == 42.0);
    CHECK(cfg.geometry->charge == 3.0);
    std::remove(path.c_str());
  }
  SUBCASE("missing file") {
    try {
      load_config("no_such_config_file.ini");
      FAIL("expected IoError");
    } catch (const IoError& e) {
      CHECK(contains(e.what(), "cannot open config file 'no_such_config_file.ini'"));
    }
  }
  SUBCASE("parse errors carry the file path as origin") {
    const std::string path = "test_config_bad_tmp.ini";
    {
      std::ofstream out(path);
      out << "[geometry]\nbogus = 1\nr_a = 0 0 0\nr_b = 1 0 0\n";
    }
    try {
      load_config(path);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.origin() == path);
      CHECK(e.line() == 2);
    }
    std::remove(path.c_str());
  }
}
