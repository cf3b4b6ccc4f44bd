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

#include "config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace ghostsim {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

double parse_double(const Entry& e, const std::string& key, const std::string& origin) {
  const std::string_view v = trim(e.value);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("key '" + key + "' expects a finite number, got '" + std::string(v) + "'",
                      origin, e.line);
  }
  return out;
}

std::size_t parse_count(const Entry& e, const std::string& key, const std::string& origin) {
  const std::string_view v = trim(e.value);
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("key '" + key + "' expects a nonnegative integer, got '" + std::string(v) +
                          "'",
                      origin, e.line);
  }
  return out;
}

Position3 parse_position(const Entry& e, const std::string& key, const std::string& origin) {
  std::istringstream in{std::string(trim(e.value))};
  std::array<double, 3> xyz{};
  for (double& coord : xyz) {
    if (!(in >> coord) || !std::isfinite(coord)) {
      throw ConfigError("key '" + key + "' expects three whitespace-separated floats, got '" +
                            std::string(trim(e.value)) + "'",
                        origin, e.line);
    }
  }
  std::string leftover;
  if (in >> leftover) {
    throw ConfigError("key '" + key + "' has trailing content '" + leftover + "'", origin,
                      e.line);
  }
  return {xyz[0], xyz[1], xyz[2]};
}

/// Pull one section's entries with a known-key contract.
class SectionReader {
 public:
  SectionReader(Section* section, std::string name, const std::string& origin)
      : section_(section), name_(std::move(name)), origin_(origin) {}

  bool present() const { return section_ != nullptr; }

  const Entry* take(const std::string& key) {
    if (section_ == nullptr) return nullptr;
    const auto it = section_->find(key);
    if (it == section_->end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  const Entry& require(const std::string& key) {
    const Entry* e = take(key);
    if (e == nullptr) {
      throw ConfigError("section [" + name_ + "] is missing required key '" + key + "'", origin_);
    }
    return *e;
  }

  double number(const std::string& key, double fallback) {
    const Entry* e = take(key);
    return e == nullptr ? fallback : parse_double(*e, key, origin_);
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const Entry* e = take(key);
    return e == nullptr ? fallback : parse_count(*e, key, origin_);
  }

  Position3 position(const std::string& key) { return parse_position(require(key), key, origin_); }

  Position3 position_or(const std::string& key, const Position3& fallback) {
    const Entry* e = take(key);
    return e == nullptr ? fallback : parse_position(*e, key, origin_);
  }

  /// Every key not consumed above is unknown, hence an error.
  void finish() {
    if (section_ == nullptr) return;
    for (const auto& [key, entry] : *section_) {
      if (!entry.used) {
        throw ConfigError("unknown key '" + key + "' in section [" + name_ + "]", origin_,
                          entry.line);
      }
    }
  }

 private:
  Section* section_;
  std::string name_;
  const std::string& origin_;
};

CutoffPair read_cutoffs(SectionReader& reader, const std::string& name,
                        const std::string& origin) {
  CutoffPair cutoffs;
  cutoffs.k_min = reader.number("k_min", cutoffs.k_min);
  cutoffs.k_max = reader.number("k_max", cutoffs.k_max);
  try {
    cutoffs.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError("section [" + name + "]: " + e.what(), origin);
  }
  return cutoffs;
}

RadialModeGrid build_grid(const CutoffPair& cutoffs, std::size_t nodes, const std::string& name,
                          const std::string& origin) {
  try {
    return RadialModeGrid::log_uniform(cutoffs, nodes);
  } catch (const std::domain_error& e) {
    throw ConfigError("section [" + name + "]: " + e.what(), origin);
  }
}

}  // namespace

const char* sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kDeltaR:
      return "delta_r";
    case SweepAxis::kCharge:
      return "charge";
    case SweepAxis::kKMax:
      return "k_max";
    case SweepAxis::kKMin:
      return "k_min";
    case SweepAxis::kMass:
      return "mass";
  }
  throw std::domain_error("unknown sweep axis");
}

void SweepSettings::validate() const {
  if (count < 2) throw std::domain_error("sweep count must be at least 2");
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw std::domain_error("sweep range must satisfy min < max with finite bounds");
  }
  if (spacing == Spacing::kLog && !(min > 0.0)) {
    throw std::domain_error("log spacing requires min > 0");
  }
  if (output_base.empty()) throw std::domain_error("sweep output path must be nonempty");
}

double SweepSettings::value_at(std::size_t i) const {
  const double t = static_cast<double>(i) / static_cast<double>(count - 1);
  if (spacing == Spacing::kLog) {
    return min * std::exp(t * std::log(max / min));
  }
  return min + t * (max - min);
}

RunConfig parse_config(std::string_view text, const std::string& origin) {
  static const std::array<std::string, 4> kSections = {"units", "geometry", "scenario", "sweep"};
  std::map<std::string, Section> sections;

  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("malformed section header '" + std::string(line) + "'", origin,
                          line_no);
      }
      const std::string name{trim(line.substr(1, line.size() - 2))};
      bool known = false;
      for (const auto& s : kSections) known = known || s == name;
      if (!known) {
        throw ConfigError("unknown section [" + name + "]", origin, line_no);
      }
      current = name;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value', got '" + std::string(line) + "'", origin,
                        line_no);
    }
    if (current.empty()) {
      throw ConfigError("entry before any [section] header", origin, line_no);
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty()) throw ConfigError("empty key", origin, line_no);
    const auto [it, inserted] = sections[current].emplace(key, Entry{value, line_no});
    if (!inserted) {
      throw ConfigError("duplicate key '" + key + "' in section [" + current + "] (first at line " +
                            std::to_string(it->second.line) + ")",
                        origin, line_no);
    }
  }

  const auto section_ptr = [&](const std::string& name) -> Section* {
    const auto it = sections.find(name);
    return it == sections.end() ? nullptr : &it->second;
  };

  RunConfig cfg;

  {
    SectionReader units(section_ptr("units"), "units", origin);
    const PhysicsContext defaults = PhysicsContext::natural();
    const double alpha = units.number("alpha", defaults.alpha);
    const double hbar = units.number("hbar", defaults.hbar);
    const double c = units.number("c", defaults.c);
    const double eps0 = units.number("eps0", defaults.eps0);
    const double r0 = units.number("r0", defaults.r0);
    units.finish();
    try {
      cfg.ctx = PhysicsContext::with(alpha, hbar, c, eps0, r0);
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("section [units]: ") + e.what(), origin);
    }
  }

  if (Section* raw = section_ptr("geometry"); raw != nullptr) {
    SectionReader geo(raw, "geometry", origin);
    SingleChargeSetup setup;
    setup.geometry.r_a = geo.position("r_a");
    setup.geometry.r_b = geo.position("r_b");
    setup.charge = geo.number("charge", setup.charge);
    setup.cutoffs = read_cutoffs(geo, "geometry", origin);
    setup.grid_nodes = geo.count("grid_nodes", setup.grid_nodes);
    geo.finish();
    if (!std::isfinite(setup.charge)) {
      throw ConfigError("section [geometry]: charge must be finite", origin);
    }
    build_grid(setup.cutoffs, setup.grid_nodes, "geometry", origin);
    cfg.geometry = setup;
  }

  if (Section* raw = section_ptr("scenario"); raw != nullptr) {
    SectionReader scn(raw, "scenario", origin);
    tomography::TomographyScenario scenario;
    scenario.r_al = scn.position("r_al");
    scenario.r_ar = scn.position("r_ar");
    scenario.r_bl = scn.position("r_bl");
    scenario.r_br = scn.position("r_br");
    scenario.q_a = scn.number("q_a", scenario.q_a);
    scenario.q_b = scn.number("q_b", scenario.q_b);
    scenario.cutoffs = read_cutoffs(scn, "scenario", origin);
    scenario.interaction_time = scn.number("interaction_time", scenario.interaction_time);
    const std::size_t nodes = scn.count("grid_nodes", RadialModeGrid::kDefaultNodes);
    const Position3 normal = scn.position_or("partition_normal", Position3{1.0, 0.0, 0.0});
    const double offset = scn.number("partition_offset", 0.0);
    scn.finish();
    scenario.grid = build_grid(scenario.cutoffs, nodes, "scenario", origin);
    try {
      scenario.validate_partition(normal, offset);
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("section [scenario]: ") + e.what(), origin);
    }
    cfg.scenario = std::move(scenario);
  }

  if (Section* raw = section_ptr("sweep"); raw != nullptr) {
    SectionReader swp(raw, "sweep", origin);
    SweepSettings settings;

    const Entry& axis = swp.require("axis");
    const std::string axis_name{trim(axis.value)};
    if (axis_name == "delta_r") {
      settings.axis = SweepAxis::kDeltaR;
    } else if (axis_name == "charge") {
      settings.axis = SweepAxis::kCharge;
    } else if (axis_name == "k_max") {
      settings.axis = SweepAxis::kKMax;
    } else if (axis_name == "k_min") {
      settings.axis = SweepAxis::kKMin;
    } else if (axis_name == "mass") {
      settings.axis = SweepAxis::kMass;
    } else {
      throw ConfigError("axis must be one of delta_r|charge|k_max|k_min|mass, got '" + axis_name +
                            "'",
                        origin, axis.line);
    }

    settings.min = parse_double(swp.require("min"), "min", origin);
    settings.max = parse_double(swp.require("max"), "max", origin);
    settings.count = parse_count(swp.require("count"), "count", origin);
    settings.output_base = std::string(trim(swp.require("output").value));

    if (const Entry* e = swp.take("spacing"); e != nullptr) {
      const std::string v{trim(e->value)};
      if (v == "linear") {
        settings.spacing = Spacing::kLinear;
      } else if (v == "log") {
        settings.spacing = Spacing::kLog;
      } else {
        throw ConfigError("spacing must be linear|log, got '" + v + "'", origin, e->line);
      }
    }
    if (const Entry* e = swp.take("format"); e != nullptr) {
      const std::string v{trim(e->value)};
      if (v == "csv") {
        settings.format = OutputFormat::kCsv;
      } else if (v == "json") {
        settings.format = OutputFormat::kJson;
      } else if (v == "both") {
        settings.format = OutputFormat::kBoth;
      } else {
        throw ConfigError("format must be csv|json|both, got '" + v + "'", origin, e->line);
      }
    }
    swp.finish();
    try {
      settings.validate();
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("section [sweep]: ") + e.what(), origin);
    }
    cfg.sweep = std::move(settings);
  }

  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config file '" + path + "'");
  return parse_config(buffer.str(), path);
}

}  // namespace ghostsim
