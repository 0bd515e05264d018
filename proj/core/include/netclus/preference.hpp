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

#include <functional>
#include <string>
#include <string_view>

#include "netclus/types.hpp"

namespace netclus {

// Maps a detour distance to a preference score in [0, 1]. Every shape is
// non-increasing with f(0) = 1, and the score is 0 beyond the coverage
// threshold tau. The threshold itself is inclusive.
class PreferenceSpec {
 public:
  enum class Kind { kBinary, kLinear, kPower, kCustom };

  static PreferenceSpec binary(Meters tau);
  // f(d) = 1 - d / tau
  static PreferenceSpec linear(Meters tau);
  // f(d) = (1 - d / tau)^exponent, exponent > 0. Exponents >= 1 give the
  // convex coverage-probability form.
  static PreferenceSpec power(Meters tau, double exponent);
  // Arbitrary shape, validated on a sample grid over [0, tau]: f(0) must be 1,
  // values must lie in [0, 1] and never increase. Throws ConfigError otherwise.
  static PreferenceSpec custom(Meters tau, std::string name, std::function<double(Meters)> shape);

  // Parses the command-line encoding `binary | linear | power:a=<float>`.
  static PreferenceSpec parse(std::string_view text, Meters tau);

  double score(Meters d) const;

  Kind kind() const { return kind_; }
  bool is_binary() const { return kind_ == Kind::kBinary; }
  Meters tau() const { return tau_; }
  double exponent() const { return exponent_; }
  // Canonical text form; also the cache key together with tau.
  std::string describe() const;
  // Same shape at a different threshold.
  PreferenceSpec with_tau(Meters tau) const;

 private:
  PreferenceSpec(Kind kind, Meters tau, double exponent);

  Kind kind_ = Kind::kBinary;
  Meters tau_ = 0.0;
  double exponent_ = 1.0;
  std::string name_;
  std::function<double(Meters)> shape_;
};

}  // namespace netclus
