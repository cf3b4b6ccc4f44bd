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

// ghostsim command-line front end. Talks to the library exclusively through
// the public C API.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "ghostsim/ghostsim.h"

namespace {

// 0 success, 2 usage/configuration/input errors, 3 runtime failures.
int exit_code_for(ghostsim_status status) {
  switch (status) {
    case GHOSTSIM_OK:
      return 0;
    case GHOSTSIM_ERR_INVALID_ARGUMENT:
    case GHOSTSIM_ERR_DOMAIN:
    case GHOSTSIM_ERR_CONFIG:
    case GHOSTSIM_ERR_IO:
      return 2;
    default:
      return 3;
  }
}

int report_failure(ghostsim_status status) {
  std::fprintf(stderr, "error: %s\n", ghostsim_last_error());
  return exit_code_for(status);
}

int print_and_free(char* text) {
  std::fputs(text, stdout);
  ghostsim_string_free(text);
  return 0;
}

int run_sweep(const std::string& config_path) {
  char* summary = nullptr;
  const ghostsim_status status = ghostsim_run_sweep_file(config_path.c_str(), &summary);
  if (status != GHOSTSIM_OK) return report_failure(status);
  return print_and_free(summary);
}

int run_threshold(const std::string& config_path) {
  char* report = nullptr;
  const ghostsim_status status = ghostsim_threshold_file(config_path.c_str(), &report);
  if (status != GHOSTSIM_OK) return report_failure(status);
  return print_and_free(report);
}

int run_scenario(const std::string& config_path) {
  char* record = nullptr;
  const ghostsim_status status = ghostsim_scenario_eval_file(config_path.c_str(), &record);
  if (status != GHOSTSIM_OK) return report_failure(status);
  return print_and_free(record);
}

int run_verify(int fock_levels, double tol_override) {
  int all_passed = 0;
  char* report = nullptr;
  const ghostsim_status status =
      ghostsim_verify(fock_levels, tol_override, &all_passed, &report);
  if (status != GHOSTSIM_OK) return report_failure(status);
  print_and_free(report);
  return all_passed != 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ghost-mode entanglement of superposed charges"};
  app.require_subcommand(1);
  app.set_version_flag("--version", [] { return std::string{ghostsim_version()}; });

  std::string sweep_config;
  auto* sweep = app.add_subcommand("sweep", "run the sweep described by a config file");
  sweep->add_option("config", sweep_config, "INI config file with a [sweep] section")
      ->required();

  std::string threshold_config;
  auto* threshold =
      app.add_subcommand("threshold", "charge detection-threshold report for a geometry");
  threshold->add_option("config", threshold_config, "INI config file with a [geometry] section")
      ->required();

  std::string scenario_config;
  auto* scenario =
      app.add_subcommand("scenario", "evaluate a two-charge tomography scenario once");
  scenario->add_option("config", scenario_config, "INI config file with a [scenario] section")
      ->required();

  int fock_levels = 64;
  double tol_override = 0.0;
  auto* verify = app.add_subcommand("verify", "run the Fock-space verification suite");
  verify->add_option("--fock-N", fock_levels, "Fock truncation level (default 64)");
  verify->add_option("--tol", tol_override,
                     "override non-exact check tolerances (default: per-check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sweep->parsed()) return run_sweep(sweep_config);
  if (threshold->parsed()) return run_threshold(threshold_config);
  if (scenario->parsed()) return run_scenario(scenario_config);
  if (verify->parsed()) return run_verify(fock_levels, tol_override);
  return 2;
}
