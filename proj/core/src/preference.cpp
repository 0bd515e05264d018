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

#include "netclus/preference.hpp"

#include <cmath>
#include <string>

#include "netclus/errors.hpp"
#include "text_io.hpp"

namespace netclus {

namespace {

void check_tau(Meters tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ConfigError("coverage threshold must be finite and non-negative");
  }
}

}  // namespace

PreferenceSpec::PreferenceSpec(Kind kind, Meters tau, double exponent)
    : kind_(kind), tau_(tau), exponent_(exponent) {
  check_tau(tau);
}

PreferenceSpec PreferenceSpec::binary(Meters tau) { return {Kind::kBinary, tau, 1.0}; }

PreferenceSpec PreferenceSpec::linear(Meters tau) { return {Kind::kLinear, tau, 1.0}; }

PreferenceSpec PreferenceSpec::power(Meters tau, double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw ConfigError("power preference needs a positive exponent");
  }
  return {Kind::kPower, tau, exponent};
}

PreferenceSpec PreferenceSpec::custom(Meters tau, std::string name,
                                      std::function<double(Meters)> shape) {
  PreferenceSpec spec(Kind::kCustom, tau, 1.0);
  if (!shape) throw ConfigError("custom preference needs a shape function");
  if (shape(0.0) != 1.0) throw ConfigError("preference shape must satisfy f(0) = 1");
  constexpr int kSamples = 1024;
  double prev = 1.0;
  for (int i = 1; i <= kSamples; ++i) {
    const double v = shape(tau * i / kSamples);
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("preference shape leaves [0, 1]");
    if (v > prev) throw ConfigError("preference shape must be non-increasing");
    prev = v;
  }
  spec.name_ = std::move(name);
  spec.shape_ = std::move(shape);
  return spec;
}

PreferenceSpec PreferenceSpec::parse(std::string_view text, Meters tau) {
  if (text == "binary") return binary(tau);
  if (text == "linear") return linear(tau);
  constexpr std::string_view kPowerPrefix = "power:a=";
  if (text.starts_with(kPowerPrefix)) {
    std::string value(text.substr(kPowerPrefix.size()));
    double a = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), a);
    if (ec != std::errc() || p != value.data() + value.size()) {
      throw ConfigError("bad power exponent `" + value + "`");
    }
    return power(tau, a);
  }
  throw ConfigError("unknown preference `" + std::string(text) +
                    "` (expected binary | linear | power:a=<float>)");
}

double PreferenceSpec::score(Meters d) const {
  if (!(d <= tau_)) return 0.0;  // also rejects NaN and +inf
  if (d < 0.0) d = 0.0;
  switch (kind_) {
    case Kind::kBinary:
      return 1.0;
    case Kind::kLinear:
      return tau_ == 0.0 ? 1.0 : 1.0 - d / tau_;
    case Kind::kPower:
      return tau_ == 0.0 ? 1.0 : std::pow(1.0 - d / tau_, exponent_);
    case Kind::kCustom:
      return shape_(d);
  }
  return 0.0;
}

std::string PreferenceSpec::describe() const {
  switch (kind_) {
    case Kind::kBinary:
      return "binary";
    case Kind::kLinear:
      return "linear";
    case Kind::kPower:
      return "power:a=" + detail::format_double(exponent_);
    case Kind::kCustom:
      return "custom:" + name_;
  }
  return "unknown";
}

PreferenceSpec PreferenceSpec::with_tau(Meters tau) const {
  PreferenceSpec copy = *this;
  check_tau(tau);
  copy.tau_ = tau;
  return copy;
}

}  // namespace netclus
