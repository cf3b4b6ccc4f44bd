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

/*
 * ghostsim C API.
 *
 * Stable extern-C surface of the ghostsim shared library: scalar-mode
 * (Lorenz-gauge "ghost") entanglement of superposed static charges, and the
 * open-loop two-charge tomography built on it.
 *
 * Conventions:
 *   - Natural internal units: hbar = c = eps0 = 1, lengths in r0 (the
 *     electron's reduced Compton wavelength by default), charges in units of
 *     the elementary charge, masses in electron masses.
 *   - Every fallible call returns a ghostsim_status; outputs are written
 *     through pointers only on GHOSTSIM_OK. ghostsim_last_error() describes
 *     the most recent failure on the calling thread.
 *   - char** outputs are heap strings owned by the caller; release them with
 *     ghostsim_string_free().
 *   - Position triples are {x, y, z}; 4x4 matrices are row-major length-16
 *     arrays over the configuration basis (AR,BR), (AL,BL), (AR,BL), (AL,BR).
 */

#ifndef GHOSTSIM_GHOSTSIM_H
#define GHOSTSIM_GHOSTSIM_H

#include <stddef.h>

#ifndef GHOSTSIM_API
#if defined(_WIN32)
#ifdef GHOSTSIM_BUILD
#define GHOSTSIM_API __declspec(dllexport)
#else
#define GHOSTSIM_API __declspec(dllimport)
#endif
#else
#define GHOSTSIM_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghostsim_status {
  GHOSTSIM_OK = 0,
  GHOSTSIM_ERR_INVALID_ARGUMENT = 1, /* null pointer or malformed argument */
  GHOSTSIM_ERR_DOMAIN = 2,           /* value outside an operation's domain */
  GHOSTSIM_ERR_CONFIG = 3,           /* malformed or inconsistent configuration */
  GHOSTSIM_ERR_TRUNCATION = 4,       /* Fock truncation refused as too small */
  GHOSTSIM_ERR_DIMENSION = 5,        /* mismatched operand shapes */
  GHOSTSIM_ERR_UNDEFINED_CONDITIONAL = 6, /* conditioning subspace has zero weight */
  GHOSTSIM_ERR_CHECK_FAILED = 7,     /* internal numerical self-check failed */
  GHOSTSIM_ERR_IO = 8,               /* file read or write failure */
  GHOSTSIM_ERR_INTERNAL = 9          /* unexpected failure */
} ghostsim_status;

/* Library version, static storage. */
GHOSTSIM_API const char* ghostsim_version(void);

/* Message of the most recent failure on this thread ("" if none). The
 * pointer stays valid until the next ghostsim call on the same thread. */
GHOSTSIM_API const char* ghostsim_last_error(void);

/* Releases a char* produced by this library. NULL is a no-op. */
GHOSTSIM_API void ghostsim_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Physics context                                                     */
/* ------------------------------------------------------------------ */

typedef struct ghostsim_context ghostsim_context;

/* Natural units with the CODATA fine-structure constant. */
GHOSTSIM_API ghostsim_status ghostsim_context_create_natural(ghostsim_context** out);

/* Explicit unit overrides; derived constants (elementary charge, Planck
 * charge and mass) are recomputed so (e/Q_P)^2 = alpha holds. */
GHOSTSIM_API ghostsim_status ghostsim_context_create(double alpha, double hbar, double c,
                                                     double eps0, double r0,
                                                     ghostsim_context** out);

GHOSTSIM_API void ghostsim_context_destroy(ghostsim_context* ctx);

/* Reads one named constant: "alpha", "hbar", "c", "eps0", "e_charge",
 * "planck_charge", "planck_mass", "r0". */
GHOSTSIM_API ghostsim_status ghostsim_context_constant(const ghostsim_context* ctx,
                                                       const char* name, double* out);

/* ------------------------------------------------------------------ */
/* Per-mode and integral quantities                                    */
/* ------------------------------------------------------------------ */

/* Charge-mode coupling g(k) for charge q (units of e); k in 1/r0. */
GHOSTSIM_API ghostsim_status ghostsim_mode_coupling(const ghostsim_context* ctx, double k,
                                                    double q, double* out);

/* Coherent amplitude of the constrained scalar mode at wave vector kvec for
 * count static charges (positions: count x,y,z triples back to back). */
GHOSTSIM_API ghostsim_status ghostsim_coherent_amplitude(const ghostsim_context* ctx,
                                                         const double kvec[3],
                                                         const double* positions,
                                                         const double* charges, size_t count,
                                                         double* out_re, double* out_im);

/* Mean photon number |amplitude|^2 of that mode. */
GHOSTSIM_API ghostsim_status ghostsim_mode_mean_photons(const ghostsim_context* ctx,
                                                        const double kvec[3],
                                                        const double* positions,
                                                        const double* charges, size_t count,
                                                        double* out);

/* Total scalar-photon number separating the field states of one charge q
 * held at r_a versus r_b, over [k_min, k_max] with grid_nodes quadrature
 * nodes (0 selects the default grid size). */
GHOSTSIM_API ghostsim_status ghostsim_total_photon_number(const ghostsim_context* ctx,
                                                          const double r_a[3],
                                                          const double r_b[3], double q,
                                                          double k_min, double k_max,
                                                          size_t grid_nodes, double* out);

/* Interferometric visibility exp(-n/2). */
GHOSTSIM_API ghostsim_status ghostsim_visibility(double n, double* out);

/* 1 - exp(-(Q/Q_P)^2), Q in units of e. */
GHOSTSIM_API ghostsim_status ghostsim_charge_decoherence_scaling(const ghostsim_context* ctx,
                                                                 double q, double* out);

/* 1 - exp(-(m/m_P)^2), m in internal mass units. */
GHOSTSIM_API ghostsim_status ghostsim_mass_decoherence_scaling(const ghostsim_context* ctx,
                                                               double m, double* out);

/* Closed-form coherent overlap <a|b> for complex amplitudes a, b. */
GHOSTSIM_API ghostsim_status ghostsim_coherent_overlap(double a_re, double a_im, double b_re,
                                                       double b_im, double* out_re,
                                                       double* out_im);

/* Coulomb phase of charges q_i, q_j (units of e) held at r_i, r_j for the
 * given time. */
GHOSTSIM_API ghostsim_status ghostsim_coulomb_phase(const ghostsim_context* ctx,
                                                    const double r_i[3], const double r_j[3],
                                                    double q_i, double q_j, double time,
                                                    double* out);

/* ------------------------------------------------------------------ */
/* Two-charge tomography scenarios                                     */
/* ------------------------------------------------------------------ */

typedef struct ghostsim_scenario ghostsim_scenario;

/* Probe charge A superposed across r_al / r_ar, reference charge B across
 * r_bl / r_br; charges in e; grid_nodes 0 selects the default. Degenerate
 * (closed-loop) geometries are accepted. */
GHOSTSIM_API ghostsim_status ghostsim_scenario_create(
    const double r_al[3], const double r_ar[3], const double r_bl[3], const double r_br[3],
    double q_a, double q_b, double k_min, double k_max, size_t grid_nodes,
    double interaction_time, ghostsim_scenario** out);

GHOSTSIM_API void ghostsim_scenario_destroy(ghostsim_scenario* scenario);

/* Gram matrix of the four constrained field states plus the mode-summed
 * squared distances; any output pointer may be NULL to skip it. */
GHOSTSIM_API ghostsim_status ghostsim_scenario_gram(const ghostsim_context* ctx,
                                                    const ghostsim_scenario* scenario,
                                                    double* overlap_re, double* overlap_im,
                                                    double* distance_sq);

/* Exchange-observable expectation conditional on the one-left-one-right
 * subspace, plus that subspace's weight. */
GHOSTSIM_API ghostsim_status ghostsim_scenario_exchange(const ghostsim_context* ctx,
                                                        const ghostsim_scenario* scenario,
                                                        double* conditional_value,
                                                        double* subspace_weight);

/* Off-diagonal overlap modulus the open-loop protocol extracts. */
GHOSTSIM_API ghostsim_status ghostsim_scenario_visibility(const ghostsim_context* ctx,
                                                          const ghostsim_scenario* scenario,
                                                          double* out);

/* Probe-field entanglement entropy (bits) of the single-charge variant. */
GHOSTSIM_API ghostsim_status ghostsim_scenario_entropy(const ghostsim_context* ctx,
                                                       const ghostsim_scenario* scenario,
                                                       double* out);

/* ------------------------------------------------------------------ */
/* File-driven runs (the CLI surface)                                  */
/* ------------------------------------------------------------------ */

/* Runs the sweep described by an INI config file; writes the configured
 * CSV/JSON outputs and returns a human-readable summary. */
GHOSTSIM_API ghostsim_status ghostsim_run_sweep_file(const char* config_path,
                                                     char** summary_out);

/* Detection-threshold report for the configured single-charge geometry. */
GHOSTSIM_API ghostsim_status ghostsim_threshold_file(const char* config_path,
                                                     char** report_out);

/* Evaluates the configured tomography scenario once; returns the record as
 * CSV (header line plus one data row). */
GHOSTSIM_API ghostsim_status ghostsim_scenario_eval_file(const char* config_path,
                                                         char** record_out);

/* Runs the Fock-space verification suite at the given truncation.
 * tol_override > 0 replaces each check's documented tolerance (exact
 * zero-tolerance checks keep theirs). all_passed_out receives 1/0. */
GHOSTSIM_API ghostsim_status ghostsim_verify(int fock_levels, double tol_override,
                                             int* all_passed_out, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GHOSTSIM_GHOSTSIM_H */
