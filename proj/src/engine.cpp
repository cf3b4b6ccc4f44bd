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

#include "engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "coupling.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "integrals.hpp"
#include "tomography.hpp"

namespace ghostsim::engine {

namespace {

constexpr std::array<const char*, 13> kFieldNames = {
    "delta_r",          "charge",     "mass",
    "k_min",            "k_max",      "grid_nodes",
    "interaction_time", "photon_number", "visibility",
    "c_rl_conditional", "subspace_weight", "entropy_bits",
    "decoherence_scale"};

std::array<double, 13> field_values(const ResultRecord& r) {
  return {r.delta_r,       r.charge,          r.mass,
          r.k_min,         r.k_max,           r.grid_nodes,
          r.interaction_time, r.photon_number, r.visibility,
          r.c_rl_conditional, r.subspace_weight, r.entropy_bits,
          r.decoherence_scale};
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(double v, const char* spec = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

ResultRecord single_record(const SingleChargeSetup& setup, const RadialModeGrid& grid,
                           const PhysicsContext& ctx) {
  ResultRecord rec;
  rec.delta_r = setup.geometry.delta_r();
  rec.charge = setup.charge;
  rec.k_min = setup.cutoffs.k_min;
  rec.k_max = setup.cutoffs.k_max;
  rec.grid_nodes = static_cast<double>(grid.size());
  rec.photon_number = total_photon_number(setup.geometry, setup.charge, setup.cutoffs, grid, ctx);
  rec.visibility = visibility(rec.photon_number);
  // A lone superposed charge is the zero-reference-charge tomography case:
  // conditional exchange value = visibility, subspace weight 1/2.
  rec.c_rl_conditional = rec.visibility;
  rec.subspace_weight = 0.5;
  rec.entropy_bits = tomography::entanglement_entropy_bits(rec.visibility);
  rec.decoherence_scale = charge_decoherence_scaling(std::abs(setup.charge), ctx);
  rec.validate();
  return rec;
}

ResultRecord scenario_record(const tomography::TomographyScenario& scn,
                             const PhysicsContext& ctx) {
  ResultRecord rec;
  rec.delta_r = (scn.r_ar - scn.r_al).norm();
  rec.charge = scn.q_a;
  rec.k_min = scn.cutoffs.k_min;
  rec.k_max = scn.cutoffs.k_max;
  rec.grid_nodes = static_cast<double>(scn.grid.size());
  rec.interaction_time = scn.interaction_time;

  const tomography::FieldGram gram = tomography::field_gram(scn, ctx);
  const int bra = static_cast<int>(tomography::kExchangeBra);
  const int ket = static_cast<int>(tomography::kExchangeKet);
  rec.photon_number = gram.distance_sq(bra, ket);
  rec.visibility = std::abs(gram.overlap(bra, ket));

  const tomography::ChargeDensityMatrix rho = tomography::reduced_density_matrix(scn, ctx, gram);
  const tomography::ExchangeExpectation exch = tomography::exchange_expectation(rho);
  rec.c_rl_conditional = exch.conditional_value;
  rec.subspace_weight = exch.subspace_weight;
  rec.entropy_bits = tomography::probe_entanglement_entropy(scn, ctx);
  rec.decoherence_scale = charge_decoherence_scaling(std::abs(scn.q_a), ctx);
  rec.validate();
  return rec;
}

ResultRecord mass_record(double mass, const PhysicsContext& ctx) {
  ResultRecord rec;
  rec.mass = mass;
  // Scaling analogue only: effective photon number 2 (m/m_P)^2, so that
  // 1 - visibility reproduces the 1 - exp(-(m/m_P)^2) decoherence scale.
  const double ratio = mass / ctx.planck_mass;
  rec.photon_number = 2.0 * ratio * ratio;
  rec.visibility = visibility(rec.photon_number);
  rec.c_rl_conditional = rec.visibility;
  rec.subspace_weight = 0.5;
  rec.entropy_bits = tomography::entanglement_entropy_bits(rec.visibility);
  rec.decoherence_scale = mass_decoherence_scaling(mass, ctx);
  rec.validate();
  return rec;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("GHOSTSIM_THREADS"); env != nullptr && *env != '\0') {
    const std::string_view v(env);
    std::size_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), parsed);
    if (ec != std::errc{} || ptr != v.data() + v.size() || parsed == 0) {
      throw ConfigError("GHOSTSIM_THREADS must be a positive integer, got '" + std::string(v) +
                        "'");
    }
    cap = parsed;
  }
  return std::max<std::size_t>(1, std::min(cap, jobs));
}

std::optional<double> fit_slope_vs_ln_delta_r(const std::vector<ResultRecord>& records) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const ResultRecord& r : records) {
    if (r.delta_r > 0.0) {
      xs.push_back(std::log(r.delta_r));
      ys.push_back(r.photon_number);
    }
  }
  if (xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) return std::nullopt;
  return sxy / sxx;
}

void write_text_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" + p.parent_path().string() +
                    "': " + ec.message());
    }
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing output file '" + path + "'");
}

nlohmann::ordered_json record_to_json(const ResultRecord& rec) {
  nlohmann::ordered_json j;
  const auto values = field_values(rec);
  for (std::size_t i = 0; i < kFieldNames.size(); ++i) j[kFieldNames[i]] = values[i];
  return j;
}

std::string render_json_document(const SweepResult& result) {
  nlohmann::ordered_json doc;
  doc["records"] = nlohmann::ordered_json::array();
  for (const ResultRecord& rec : result.records) doc["records"].push_back(record_to_json(rec));
  nlohmann::ordered_json summary;
  summary["axis"] = result.summary.axis;
  summary["count"] = result.summary.count;
  if (result.summary.slope_n_vs_ln_delta_r) {
    summary["slope_n_vs_ln_delta_r"] = *result.summary.slope_n_vs_ln_delta_r;
  }
  if (result.summary.expected_slope) {
    summary["expected_slope"] = *result.summary.expected_slope;
  }
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

}  // namespace

void ResultRecord::validate() const {
  const auto values = field_values(*this);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericalCheckError(std::string("result field '") + kFieldNames[i] +
                                "' is not finite");
    }
  }
  if (!(visibility > 0.0) || visibility > 1.0) {
    throw NumericalCheckError(
        "visibility " + fmt17(visibility) +
        " left (0, 1]; the requested parameters underflow double precision");
  }
}

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kFieldNames.size(); ++i) {
    if (i != 0) out += ',';
    out += kFieldNames[i];
  }
  return out;
}

std::string csv_row(const ResultRecord& record) {
  const auto values = field_values(record);
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += fmt17(values[i]);
  }
  return out;
}

SweepResult run_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) throw ConfigError("sweep requires a [sweep] section");
  const SweepSettings& sw = *cfg.sweep;
  const bool has_geometry = cfg.geometry.has_value();
  const bool has_scenario = cfg.scenario.has_value();

  if (sw.axis == SweepAxis::kMass) {
    if (has_geometry || has_scenario) {
      throw ConfigError(
          "the mass axis is a pure scaling analogue; remove [geometry] and [scenario]");
    }
    if (sw.min < 0.0) throw ConfigError("mass axis requires min >= 0");
  } else {
    if (has_geometry == has_scenario) {
      throw ConfigError("sweep needs exactly one of [geometry] or [scenario]");
    }
    const CutoffPair base_cutoffs =
        has_geometry ? cfg.geometry->cutoffs : cfg.scenario->cutoffs;
    switch (sw.axis) {
      case SweepAxis::kDeltaR:
        if (sw.min < 0.0) throw ConfigError("delta_r axis requires min >= 0");
        if (has_scenario && !((cfg.scenario->r_ar - cfg.scenario->r_al).norm() > 0.0)) {
          throw ConfigError(
              "delta_r axis over a scenario needs distinct r_al and r_ar to set a direction");
        }
        break;
      case SweepAxis::kCharge:
        break;
      case SweepAxis::kKMax:
        if (!(sw.min > base_cutoffs.k_min)) {
          throw ConfigError("k_max axis requires min > the configured k_min");
        }
        break;
      case SweepAxis::kKMin:
        if (!(sw.min > 0.0) || !(sw.max < base_cutoffs.k_max)) {
          throw ConfigError("k_min axis requires 0 < min and max < the configured k_max");
        }
        break;
      case SweepAxis::kMass:
        break;
    }
  }

  const bool cutoffs_fixed = sw.axis != SweepAxis::kKMax && sw.axis != SweepAxis::kKMin;
  std::optional<RadialModeGrid> shared_grid;
  if (has_geometry && cutoffs_fixed) {
    shared_grid = RadialModeGrid::log_uniform(cfg.geometry->cutoffs, cfg.geometry->grid_nodes);
  }

  const auto eval_point = [&](std::size_t i) -> ResultRecord {
    const double value = sw.value_at(i);
    if (sw.axis == SweepAxis::kMass) return mass_record(value, cfg.ctx);

    if (has_geometry) {
      SingleChargeSetup setup = *cfg.geometry;
      switch (sw.axis) {
        case SweepAxis::kDeltaR: {
          Position3 dir = setup.geometry.r_b - setup.geometry.r_a;
          const double len = dir.norm();
          dir = len > 0.0 ? (1.0 / len) * dir : Position3{1.0, 0.0, 0.0};
          setup.geometry.r_b = setup.geometry.r_a + value * dir;
          break;
        }
        case SweepAxis::kCharge:
          setup.charge = value;
          break;
        case SweepAxis::kKMax:
          setup.cutoffs.k_max = value;
          break;
        case SweepAxis::kKMin:
          setup.cutoffs.k_min = value;
          break;
        case SweepAxis::kMass:
          break;
      }
      if (cutoffs_fixed) return single_record(setup, *shared_grid, cfg.ctx);
      const RadialModeGrid grid = RadialModeGrid::log_uniform(setup.cutoffs, setup.grid_nodes);
      return single_record(setup, grid, cfg.ctx);
    }

    tomography::TomographyScenario scn = *cfg.scenario;
    switch (sw.axis) {
      case SweepAxis::kDeltaR: {
        const Position3 mid = 0.5 * (scn.r_al + scn.r_ar);
        Position3 dir = scn.r_ar - scn.r_al;
        dir = (1.0 / dir.norm()) * dir;
        scn.r_al = mid + (-0.5 * value) * dir;
        scn.r_ar = mid + (0.5 * value) * dir;
        break;
      }
      case SweepAxis::kCharge:
        scn.q_a = value;
        break;
      case SweepAxis::kKMax:
        scn.cutoffs.k_max = value;
        scn.grid = RadialModeGrid::log_uniform(scn.cutoffs, scn.grid.size());
        break;
      case SweepAxis::kKMin:
        scn.cutoffs.k_min = value;
        scn.grid = RadialModeGrid::log_uniform(scn.cutoffs, scn.grid.size());
        break;
      case SweepAxis::kMass:
        break;
    }
    return scenario_record(scn, cfg.ctx);
  };

  SweepResult result;
  result.records.resize(sw.count);

  const std::size_t workers = worker_count(sw.count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < sw.count; ++i) result.records[i] = eval_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const auto work = [&] {
      while (!stop.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= sw.count) return;
        try {
          result.records[i] = eval_point(i);
        } catch (...) {
          {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
          stop.store(true, std::memory_order_relaxed);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  result.summary.axis = sweep_axis_name(sw.axis);
  result.summary.count = sw.count;
  if (sw.axis == SweepAxis::kDeltaR) {
    result.summary.slope_n_vs_ln_delta_r = fit_slope_vs_ln_delta_r(result.records);
    if (has_geometry) {
      const double q = cfg.geometry->charge;
      result.summary.expected_slope = (2.0 * cfg.ctx.alpha / kPi) * q * q;
    }
  }

  if (sw.format == OutputFormat::kCsv || sw.format == OutputFormat::kBoth) {
    std::string csv = csv_header();
    csv += '\n';
    for (const ResultRecord& rec : result.records) {
      csv += csv_row(rec);
      csv += '\n';
    }
    const std::string path = sw.output_base + ".csv";
    write_text_file(path, csv);
    result.summary.files_written.push_back(path);
  }
  if (sw.format == OutputFormat::kJson || sw.format == OutputFormat::kBoth) {
    const std::string path = sw.output_base + ".json";
    write_text_file(path, render_json_document(result));
    result.summary.files_written.push_back(path);
  }
  return result;
}

std::string render_sweep_summary(const SweepSummary& summary) {
  std::ostringstream out;
  out << "sweep axis=" << summary.axis << " points=" << summary.count << "\n";
  if (summary.slope_n_vs_ln_delta_r) {
    out << "  fitted d n / d ln(delta_r) = " << fmt(*summary.slope_n_vs_ln_delta_r);
    if (summary.expected_slope) {
      out << "  (expected (2 alpha / pi) q^2 = " << fmt(*summary.expected_slope) << ")";
    }
    out << "\n";
  }
  for (const std::string& f : summary.files_written) out << "  wrote " << f << "\n";
  return out.str();
}

ResultRecord evaluate_scenario(const RunConfig& cfg) {
  if (!cfg.scenario) throw ConfigError("scenario evaluation requires a [scenario] section");
  return scenario_record(*cfg.scenario, cfg.ctx);
}

ThresholdSummary compute_threshold(const RunConfig& cfg) {
  if (!cfg.geometry) throw ConfigError("threshold report requires a [geometry] section");
  const SingleChargeSetup& setup = *cfg.geometry;
  const RadialModeGrid grid = RadialModeGrid::log_uniform(setup.cutoffs, setup.grid_nodes);

  ThresholdSummary s;
  s.delta_r = setup.geometry.delta_r();
  s.k_min = setup.cutoffs.k_min;
  s.k_max = setup.cutoffs.k_max;
  s.grid_nodes = grid.size();
  s.configured_charge = setup.charge;
  s.n_configured =
      total_photon_number(setup.geometry, setup.charge, setup.cutoffs, grid, cfg.ctx);
  s.bounded = s.n_configured > 0.0 && setup.charge != 0.0;
  if (s.bounded) {
    s.n_unit = s.n_configured / (setup.charge * setup.charge);
    s.q_star_n1 = 1.0 / std::sqrt(s.n_unit);
    s.q_star_half_visibility = std::sqrt(2.0 * std::log(2.0) / s.n_unit);
    s.n_at_137 = s.n_unit * 137.0 * 137.0;
    s.visibility_at_137 = std::exp(-0.5 * s.n_at_137);
  }
  return s;
}

std::string render_threshold_report(const ThresholdSummary& s, double alpha) {
  std::ostringstream out;
  out << "detection threshold report (charges in units of e)\n";
  out << "  delta_r / r0          = " << fmt(s.delta_r) << "\n";
  out << "  ln(delta_r / r0)      = "
      << (s.delta_r > 0.0 ? fmt(std::log(s.delta_r)) : std::string("n/a (delta_r = 0)")) << "\n";
  out << "  cutoffs [1/r0]        = [" << fmt(s.k_min) << ", " << fmt(s.k_max)
      << "], nodes = " << s.grid_nodes << "\n";
  out << "  configured charge     = " << fmt(s.configured_charge) << " e\n";
  out << "  n(configured)         = " << fmt17(s.n_configured) << "\n";

  if (!s.bounded) {
    out << "  no finite threshold: the branch field states coincide for every charge\n";
    out << "  (zero separation or zero coupling), so superpositions stay fully visible\n";
    return out.str();
  }

  out << "  n(1 e)                = " << fmt17(s.n_unit)
      << "  (n / alpha = " << fmt(s.n_unit / alpha) << ")\n";
  out << "  visibility(1 e)       = " << fmt17(std::exp(-0.5 * s.n_unit)) << "\n";
  out << "  n(137 e)              = " << fmt17(s.n_at_137) << "\n";
  out << "  visibility(137 e)     = " << fmt17(s.visibility_at_137) << "\n";
  out << "  Q*(n = 1)             = " << fmt17(s.q_star_n1) << " e\n";
  out << "  Q*(visibility = 1/2)  = " << fmt17(s.q_star_half_visibility) << " e\n";
  out << "  reference charges     = 1/sqrt(alpha) = " << fmt(1.0 / std::sqrt(alpha))
      << " e; 1/alpha = " << fmt(1.0 / alpha) << " e\n";
  return out.str();
}

std::string threshold_report(const RunConfig& cfg) {
  return render_threshold_report(compute_threshold(cfg), cfg.ctx.alpha);
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  const int n_levels = options.fock_levels;
  if (n_levels < 4) {
    throw TruncationError("verification needs at least 4 Fock levels", 4);
  }
  // Largest coherent sampling radius whose Poisson tail fits the truncation,
  // so small --fock-N values still exercise every check. The margin tail is
  // far below the documented tolerances: a truncated coherent state leaves a
  // supplementary residual of order |lambda| sqrt(tail).
  constexpr double kMarginTail = 1e-18;
  const double radius = [&] {
    for (const double r : {2.0, 1.5, 1.0, 0.75, 0.5, 0.25}) {
      if (fock::required_levels(r, kMarginTail) <= n_levels) return r;
    }
    throw TruncationError("verification needs room for coherent states of amplitude 0.25",
                          fock::required_levels(0.25, kMarginTail));
  }();
  const auto tol = [&](double documented) {
    return options.tol_override > 0.0 ? options.tol_override : documented;
  };

  VerifyReport report;
  report.fock_levels = n_levels;
  const auto add = [&](std::string name, double deviation, double tolerance) {
    report.checks.push_back(
        VerifyCheck{std::move(name), deviation, tolerance, deviation <= tolerance});
  };

  std::mt19937 rng(20260815u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto sample_amplitude = [&] {
    const double r = radius * std::sqrt(unit(rng));
    const double angle = 2.0 * kPi * unit(rng);
    return std::complex<double>(r * std::cos(angle), r * std::sin(angle));
  };

  constexpr int kPairs = 200;
  constexpr int kResidualSamples = 50;
  double norm_dev = 0.0;
  double mean_dev = 0.0;
  double overlap_dev = 0.0;
  double residual_dev = 0.0;
  for (int i = 0; i < kPairs; ++i) {
    const std::complex<double> la = sample_amplitude();
    const std::complex<double> lb = sample_amplitude();
    const fock::FockVector psi = fock::displace(la, n_levels);
    const fock::FockVector phi = fock::displace(lb, n_levels);

    norm_dev = std::max(norm_dev, std::abs(psi.norm() - 1.0));
    double mean = 0.0;
    for (int n = 0; n < psi.levels(); ++n) mean += n * std::norm(psi.coeffs[n]);
    mean_dev = std::max(mean_dev, std::abs(mean - std::norm(la)));

    const std::complex<double> brute = psi.coeffs.dot(phi.coeffs);
    overlap_dev = std::max(overlap_dev, std::abs(brute - fock::coherent_overlap(la, lb)));

    if (i < kResidualSamples) {
      residual_dev = std::max(residual_dev, fock::supplementary_residual(la, psi));
    }
  }
  add("displaced-state norm equals 1", norm_dev, tol(1e-12));
  add("displaced-state mean photon number equals |lambda|^2", mean_dev, tol(1e-10));
  add("coherent overlap: closed form vs Fock brute force (200 pairs)", overlap_dev, tol(1e-10));
  add("supplementary-condition residual of displaced states", residual_dev, tol(1e-8));

  {
    const fock::FockVector vacuum = fock::displace(0.0, n_levels);
    const double res = fock::supplementary_residual(1.0, vacuum);
    add("vacuum residual against lambda = 1 equals 1", std::abs(res - 1.0), tol(1e-14));
  }

  // Commutator entries are products of square roots, so rounding grows like
  // N * epsilon; the metric checks involve sign flips only and stay exact.
  const double eps = std::numeric_limits<double>::epsilon();
  const fock::LadderReport ladder = fock::ladder_check(n_levels);
  add("ladder commutator [a, aT] = -1 below the truncation edge", ladder.commutator_dev,
      tol(4.0 * n_levels * eps));
  add("scalar raising operator equals M adag M (exact)", ladder.m_adjoint_dev, 0.0);
  add("metric involution M^2 = 1 (exact)", ladder.m_square_dev, 0.0);
  add("truncation-edge commutator artifact equals N (relative)",
      std::abs(ladder.top_level_dev - static_cast<double>(n_levels)) /
          static_cast<double>(n_levels),
      tol(4.0 * eps));

  {
    const int max_m = std::min(10, n_levels - 2);
    const auto samples = fock::ladder_norm_signs(n_levels, max_m);
    // Signs must be exact (a violation pushes the deviation to infinity);
    // magnitudes are compared relative to m!.
    double sign_dev = 0.0;
    double factorial = 1.0;
    for (const fock::LadderNormSample& s : samples) {
      factorial *= s.m;
      const double expected = (s.m % 2 == 0) ? factorial : -factorial;
      const bool sign_ok =
          (s.m % 2 == 0 ? s.indefinite_norm > 0.0 : s.indefinite_norm < 0.0) &&
          s.metric_norm > 0.0;
      if (!sign_ok) sign_dev = std::numeric_limits<double>::infinity();
      sign_dev = std::max(sign_dev, std::abs(s.indefinite_norm - expected) / factorial);
      sign_dev = std::max(sign_dev, std::abs(s.metric_norm - factorial) / factorial);
    }
    add("norm signs: indefinite (-1)^m m!, metric-repaired +m!", sign_dev, tol(1e-12));
  }

  {
    const double omega = 0.75;
    const double drive_scale = 0.4 * (radius / 2.0);
    const fock::DrivenGroundState low =
        fock::driven_ground_state(omega, drive_scale / std::sqrt(omega), n_levels);
    const fock::DrivenGroundState high =
        fock::driven_ground_state(2.0 * omega, drive_scale / std::sqrt(2.0 * omega), n_levels);
    const double ratio = std::abs(high.lambda) / std::abs(low.lambda);
    add("driven amplitude scaling |lambda(2w)/lambda(w)| = 2^(-3/2)",
        std::abs(ratio - std::pow(2.0, -1.5)), tol(1e-12));
    add("driven ground state satisfies the supplementary condition",
        fock::supplementary_residual(low.lambda, low.state), tol(1e-8));
  }

  return report;
}

std::string render_verify_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "Fock verification suite (N = " << report.fock_levels << ")\n";
  for (const VerifyCheck& c : report.checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    for (std::size_t pad = c.name.size(); pad < 60; ++pad) out << ' ';
    out << " dev " << fmt(c.deviation, "%.3e") << "  tol " << fmt(c.tolerance, "%.1e") << "\n";
  }
  const std::size_t failed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(),
                    [](const VerifyCheck& c) { return !c.passed; }));
  if (failed == 0) {
    out << "result: all " << report.checks.size() << " checks passed\n";
  } else {
    out << "result: " << failed << " of " << report.checks.size() << " checks FAILED\n";
  }
  return out.str();
}

}  // namespace ghostsim::engine
