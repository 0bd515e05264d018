// Copyright 2026 The NetClus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netclus {

// Process exit codes used by the command-line tools.
enum class ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kValidation = 2,
  kResourceGuard = 3,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, ExitCode code = ExitCode::kValidation)
      : std::runtime_error(what), code_(code) {}
  ExitCode exit_code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain rule (unknown id, bad weight, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inconsistent query or build configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what, ExitCode::kUsage) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(what, ExitCode::kUsage) {}
};

// An operation was called on inputs outside its contract (e.g. non-binary
// preference for the sketch-based greedy).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what, ExitCode::kUsage) {}
};

// Refusal to run an operation whose cost exceeds a configured guard.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(what, ExitCode::kResourceGuard) {}
};

}  // namespace netclus
