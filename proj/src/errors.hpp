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

#ifndef GHOSTSIM_ERRORS_HPP
#define GHOSTSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghostsim {

/// Malformed or inconsistent configuration (from file or built in code).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, std::string origin = {}, int line = 0)
      : std::runtime_error(line > 0 ? origin + ":" + std::to_string(line) + ": " + message
                                    : (origin.empty() ? message : origin + ": " + message)),
        origin_(std::move(origin)),
        line_(line) {}

  const std::string& origin() const noexcept { return origin_; }
  int line() const noexcept { return line_; }

 private:
  std::string origin_;
  int line_;
};

/// A Fock-space operation refused to run at the requested truncation.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& message, int required_levels)
      : std::runtime_error(message), required_levels_(required_levels) {}

  /// Smallest truncation that would satisfy the tail-mass requirement.
  int required_levels() const noexcept { return required_levels_; }

 private:
  int required_levels_;
};

/// Operands with incompatible truncations or shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A conditional expectation whose conditioning subspace has zero weight.
class UndefinedConditionalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal numerical self-check failed (cancellation, positivity, ...).
class NumericalCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File output or input failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ghostsim

#endif  // GHOSTSIM_ERRORS_HPP
