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

#include "ghostsim/ghostsim.h"

#include <complex>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "coupling.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "geometry.hpp"
#include "integrals.hpp"
#include "quadrature.hpp"
#include "tomography.hpp"
#include "units.hpp"

struct ghostsim_context {
  ghostsim::PhysicsContext ctx;
};

struct ghostsim_scenario {
  ghostsim::tomography::TomographyScenario scn;
};

namespace {

thread_local std::string g_last_error;

ghostsim_status fail(ghostsim_status status, const char* message) {
  g_last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes and the
/// thread-local error message. Success clears the message.
template <typename Body>
ghostsim_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return GHOSTSIM_OK;
  } catch (const ghostsim::ConfigError& e) {
    return fail(GHOSTSIM_ERR_CONFIG, e.what());
  } catch (const ghostsim::TruncationError& e) {
    return fail(GHOSTSIM_ERR_TRUNCATION, e.what());
  } catch (const ghostsim::UndefinedConditionalError& e) {
    return fail(GHOSTSIM_ERR_UNDEFINED_CONDITIONAL, e.what());
  } catch (const ghostsim::NumericalCheckError& e) {
    return fail(GHOSTSIM_ERR_CHECK_FAILED, e.what());
  } catch (const ghostsim::IoError& e) {
    return fail(GHOSTSIM_ERR_IO, e.what());
  } catch (const ghostsim::DimensionError& e) {
    return fail(GHOSTSIM_ERR_DIMENSION, e.what());
  } catch (const std::domain_error& e) {
    return fail(GHOSTSIM_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GHOSTSIM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GHOSTSIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GHOSTSIM_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) {
    throw std::invalid_argument(std::string{name} + " must not be null");
  }
}

ghostsim::Position3 to_position(const double r[3]) { return {r[0], r[1], r[2]}; }

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ghostsim::RadialModeGrid make_grid(const ghostsim::CutoffPair& cutoffs, size_t grid_nodes) {
  const std::size_t nodes =
      grid_nodes == 0 ? ghostsim::RadialModeGrid::kDefaultNodes : grid_nodes;
  return ghostsim::RadialModeGrid::log_uniform(cutoffs, nodes);
}

std::vector<ghostsim::PointCharge> to_charges(const double* positions, const double* charges,
                                              size_t count) {
  if (count > 0) {
    require(positions, "positions");
    require(charges, "charges");
  }
  std::vector<ghostsim::PointCharge> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    out.push_back({to_position(positions + 3 * i), charges[i]});
  }
  return out;
}

}  // namespace

extern "C" {

const char* ghostsim_version(void) { return "1.0.0"; }

const char* ghostsim_last_error(void) { return g_last_error.c_str(); }

void ghostsim_string_free(char* text) { delete[] text; }

/* ------------------------------------------------------------------ */
/* Physics context                                                     */
/* ------------------------------------------------------------------ */

ghostsim_status ghostsim_context_create_natural(ghostsim_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ghostsim_context{ghostsim::PhysicsContext::natural()};
  });
}

ghostsim_status ghostsim_context_create(double alpha, double hbar, double c, double eps0,
                                        double r0, ghostsim_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ghostsim_context{ghostsim::PhysicsContext::with(alpha, hbar, c, eps0, r0)};
  });
}

void ghostsim_context_destroy(ghostsim_context* ctx) { delete ctx; }

ghostsim_status ghostsim_context_constant(const ghostsim_context* ctx, const char* name,
                                          double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(name, "name");
    require(out, "out");
    const std::string key{name};
    const ghostsim::PhysicsContext& c = ctx->ctx;
    if (key == "alpha") {
      *out = c.alpha;
    } else if (key == "hbar") {
      *out = c.hbar;
    } else if (key == "c") {
      *out = c.c;
    } else if (key == "eps0") {
      *out = c.eps0;
    } else if (key == "e_charge") {
      *out = c.e_charge;
    } else if (key == "planck_charge") {
      *out = c.planck_charge;
    } else if (key == "planck_mass") {
      *out = c.planck_mass;
    } else if (key == "r0") {
      *out = c.r0;
    } else {
      throw std::invalid_argument("unknown constant: " + key);
    }
  });
}

/* ------------------------------------------------------------------ */
/* Per-mode and integral quantities                                    */
/* ------------------------------------------------------------------ */

ghostsim_status ghostsim_mode_coupling(const ghostsim_context* ctx, double k, double q,
                                       double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ghostsim::mode_coupling(k, q, ctx->ctx);
  });
}

ghostsim_status ghostsim_coherent_amplitude(const ghostsim_context* ctx, const double kvec[3],
                                            const double* positions, const double* charges,
                                            size_t count, double* out_re, double* out_im) {
  return guarded([&] {
    require(ctx, "ctx");
    require(kvec, "kvec");
    require(out_re, "out_re");
    require(out_im, "out_im");
    const auto sources = to_charges(positions, charges, count);
    const ghostsim::WaveVector kv{kvec[0], kvec[1], kvec[2]};
    const std::complex<double> amp = ghostsim::coherent_amplitude(kv, sources, ctx->ctx);
    *out_re = amp.real();
    *out_im = amp.imag();
  });
}

ghostsim_status ghostsim_mode_mean_photons(const ghostsim_context* ctx, const double kvec[3],
                                           const double* positions, const double* charges,
                                           size_t count, double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(kvec, "kvec");
    require(out, "out");
    const auto sources = to_charges(positions, charges, count);
    const ghostsim::WaveVector kv{kvec[0], kvec[1], kvec[2]};
    const std::complex<double> amp = ghostsim::coherent_amplitude(kv, sources, ctx->ctx);
    *out = std::norm(amp);
  });
}

ghostsim_status ghostsim_total_photon_number(const ghostsim_context* ctx, const double r_a[3],
                                             const double r_b[3], double q, double k_min,
                                             double k_max, size_t grid_nodes, double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(r_a, "r_a");
    require(r_b, "r_b");
    require(out, "out");
    const ghostsim::SeparationGeometry geom{to_position(r_a), to_position(r_b)};
    const ghostsim::CutoffPair cutoffs{k_min, k_max};
    const auto grid = make_grid(cutoffs, grid_nodes);
    *out = ghostsim::total_photon_number(geom, q, cutoffs, grid, ctx->ctx);
  });
}

ghostsim_status ghostsim_visibility(double n, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghostsim::visibility(n);
  });
}

ghostsim_status ghostsim_charge_decoherence_scaling(const ghostsim_context* ctx, double q,
                                                    double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ghostsim::charge_decoherence_scaling(q, ctx->ctx);
  });
}

ghostsim_status ghostsim_mass_decoherence_scaling(const ghostsim_context* ctx, double m,
                                                  double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ghostsim::mass_decoherence_scaling(m, ctx->ctx);
  });
}

ghostsim_status ghostsim_coherent_overlap(double a_re, double a_im, double b_re, double b_im,
                                          double* out_re, double* out_im) {
  return guarded([&] {
    require(out_re, "out_re");
    require(out_im, "out_im");
    const std::complex<double> overlap =
        ghostsim::fock::coherent_overlap({a_re, a_im}, {b_re, b_im});
    *out_re = overlap.real();
    *out_im = overlap.imag();
  });
}

ghostsim_status ghostsim_coulomb_phase(const ghostsim_context* ctx, const double r_i[3],
                                       const double r_j[3], double q_i, double q_j, double time,
                                       double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(r_i, "r_i");
    require(r_j, "r_j");
    require(out, "out");
    *out = ghostsim::tomography::coulomb_phase(to_position(r_i), to_position(r_j), q_i, q_j,
                                               time, ctx->ctx);
  });
}

/* ------------------------------------------------------------------ */
/* Two-charge tomography scenarios                                     */
/* ------------------------------------------------------------------ */

ghostsim_status ghostsim_scenario_create(const double r_al[3], const double r_ar[3],
                                         const double r_bl[3], const double r_br[3], double q_a,
                                         double q_b, double k_min, double k_max,
                                         size_t grid_nodes, double interaction_time,
                                         ghostsim_scenario** out) {
  return guarded([&] {
    require(r_al, "r_al");
    require(r_ar, "r_ar");
    require(r_bl, "r_bl");
    require(r_br, "r_br");
    require(out, "out");
    ghostsim::tomography::TomographyScenario scn;
    scn.r_al = to_position(r_al);
    scn.r_ar = to_position(r_ar);
    scn.r_bl = to_position(r_bl);
    scn.r_br = to_position(r_br);
    scn.q_a = q_a;
    scn.q_b = q_b;
    scn.cutoffs = ghostsim::CutoffPair{k_min, k_max};
    scn.grid = make_grid(scn.cutoffs, grid_nodes);
    scn.interaction_time = interaction_time;
    scn.validate();
    *out = new ghostsim_scenario{std::move(scn)};
  });
}

void ghostsim_scenario_destroy(ghostsim_scenario* scenario) { delete scenario; }

ghostsim_status ghostsim_scenario_gram(const ghostsim_context* ctx,
                                       const ghostsim_scenario* scenario, double* overlap_re,
                                       double* overlap_im, double* distance_sq) {
  return guarded([&] {
    require(ctx, "ctx");
    require(scenario, "scenario");
    const auto gram = ghostsim::tomography::field_gram(scenario->scn, ctx->ctx);
    for (int i = 0; i < ghostsim::tomography::kConfigCount; ++i) {
      for (int j = 0; j < ghostsim::tomography::kConfigCount; ++j) {
        const int idx = i * ghostsim::tomography::kConfigCount + j;
        if (overlap_re != nullptr) overlap_re[idx] = gram.overlap(i, j).real();
        if (overlap_im != nullptr) overlap_im[idx] = gram.overlap(i, j).imag();
        if (distance_sq != nullptr) distance_sq[idx] = gram.distance_sq(i, j);
      }
    }
  });
}

ghostsim_status ghostsim_scenario_exchange(const ghostsim_context* ctx,
                                           const ghostsim_scenario* scenario,
                                           double* conditional_value,
                                           double* subspace_weight) {
  return guarded([&] {
    require(ctx, "ctx");
    require(scenario, "scenario");
    require(conditional_value, "conditional_value");
    require(subspace_weight, "subspace_weight");
    const auto rho = ghostsim::tomography::reduced_density_matrix(scenario->scn, ctx->ctx);
    const auto exchange = ghostsim::tomography::exchange_expectation(rho);
    *conditional_value = exchange.conditional_value;
    *subspace_weight = exchange.subspace_weight;
  });
}

ghostsim_status ghostsim_scenario_visibility(const ghostsim_context* ctx,
                                             const ghostsim_scenario* scenario, double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(scenario, "scenario");
    require(out, "out");
    *out = ghostsim::tomography::probe_visibility(scenario->scn, ctx->ctx);
  });
}

ghostsim_status ghostsim_scenario_entropy(const ghostsim_context* ctx,
                                          const ghostsim_scenario* scenario, double* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(scenario, "scenario");
    require(out, "out");
    *out = ghostsim::tomography::probe_entanglement_entropy(scenario->scn, ctx->ctx);
  });
}

/* ------------------------------------------------------------------ */
/* File-driven runs                                                    */
/* ------------------------------------------------------------------ */

ghostsim_status ghostsim_run_sweep_file(const char* config_path, char** summary_out) {
  return guarded([&] {
    require(config_path, "config_path");
    require(summary_out, "summary_out");
    const auto cfg = ghostsim::load_config(config_path);
    const auto result = ghostsim::engine::run_sweep(cfg);
    *summary_out = copy_string(ghostsim::engine::render_sweep_summary(result.summary));
  });
}

ghostsim_status ghostsim_threshold_file(const char* config_path, char** report_out) {
  return guarded([&] {
    require(config_path, "config_path");
    require(report_out, "report_out");
    const auto cfg = ghostsim::load_config(config_path);
    *report_out = copy_string(ghostsim::engine::threshold_report(cfg));
  });
}

ghostsim_status ghostsim_scenario_eval_file(const char* config_path, char** record_out) {
  return guarded([&] {
    require(config_path, "config_path");
    require(record_out, "record_out");
    const auto cfg = ghostsim::load_config(config_path);
    const auto record = ghostsim::engine::evaluate_scenario(cfg);
    *record_out =
        copy_string(ghostsim::engine::csv_header() + "\n" + ghostsim::engine::csv_row(record) +
                    "\n");
  });
}

ghostsim_status ghostsim_verify(int fock_levels, double tol_override, int* all_passed_out,
                                char** report_out) {
  return guarded([&] {
    require(all_passed_out, "all_passed_out");
    require(report_out, "report_out");
    ghostsim::engine::VerifyOptions options;
    options.fock_levels = fock_levels;
    options.tol_override = tol_override;
    const auto report = ghostsim::engine::run_verification(options);
    *all_passed_out = report.all_passed() ? 1 : 0;
    *report_out = copy_string(ghostsim::engine::render_verify_report(report));
  });
}

} /* extern "C" */
