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
#include <cstdint>
#include <vector>

namespace netclus {

// Flajolet-Martin distinct-count sketch: f independent 32-bit registers, each
// fed by its own seeded hash. Register r gets bit rho_r(x) set for element x,
// where rho_r is the index of the lowest set bit of hash_r(x) (capped at 31).
class FmSketch {
 public:
  static constexpr std::size_t kDefaultRegisters = 30;
  static constexpr double kPhi = 0.77351;

  explicit FmSketch(std::size_t registers = kDefaultRegisters, std::uint64_t seed = kDefaultSeed);

  void insert(std::uint64_t element);
  // Register-wise OR. Throws ContractError when register count or seed differ.
  FmSketch& merge(const FmSketch& other);
  friend FmSketch unite(FmSketch a, const FmSketch& b) { return a.merge(b); }

  // 2^(mean lowest-unset-bit index) / phi; 0 for an empty sketch.
  double estimate() const;
  // Estimate of |this ∪ other| without materializing the union.
  double estimate_union(const FmSketch& other) const;

  bool empty() const;
  std::size_t register_count() const { return registers_.size(); }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint32_t>& registers() const { return registers_; }

  static constexpr std::uint64_t kDefaultSeed = 0x6a09e667f3bcc909ULL;

  // Bit index set in register `r` by `element`. Exposed for tests.
  unsigned rank(std::size_t r, std::uint64_t element) const;

  friend bool operator==(const FmSketch&, const FmSketch&) = default;

 private:
  std::uint64_t seed_;
  std::vector<std::uint64_t> register_seeds_;
  std::vector<std::uint32_t> registers_;
};

}  // namespace netclus
