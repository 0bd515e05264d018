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

#include "netclus/fm_sketch.hpp"

#include <bit>
#include <cmath>

#include "netclus/errors.hpp"

namespace netclus {

namespace {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double estimate_from(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>* b) {
  std::uint64_t any = 0;
  std::uint64_t sum = 0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    const std::uint32_t word = b ? (a[r] | (*b)[r]) : a[r];
    any |= word;
    sum += static_cast<std::uint64_t>(std::countr_one(word));
  }
  if (any == 0) return 0.0;
  const double mean = static_cast<double>(sum) / static_cast<double>(a.size());
  return std::exp2(mean) / FmSketch::kPhi;
}

}  // namespace

FmSketch::FmSketch(std::size_t registers, std::uint64_t seed)
    : seed_(seed), register_seeds_(registers), registers_(registers, 0) {
  if (registers == 0) throw ArgumentError("an FM sketch needs at least one register");
  std::uint64_t state = seed;
  for (auto& s : register_seeds_) {
    state = mix64(state);
    s = state;
  }
}

unsigned FmSketch::rank(std::size_t r, std::uint64_t element) const {
  const std::uint64_t h = mix64(register_seeds_[r] ^ mix64(element));
  const unsigned z = static_cast<unsigned>(std::countr_zero(h));
  return z > 31 ? 31 : z;
}

void FmSketch::insert(std::uint64_t element) {
  for (std::size_t r = 0; r < registers_.size(); ++r) {
    registers_[r] |= std::uint32_t{1} << rank(r, element);
  }
}

FmSketch& FmSketch::merge(const FmSketch& other) {
  if (other.registers_.size() != registers_.size() || other.seed_ != seed_) {
    throw ContractError("cannot unite FM sketches with different registers or seeds");
  }
  for (std::size_t r = 0; r < registers_.size(); ++r) registers_[r] |= other.registers_[r];
  return *this;
}

double FmSketch::estimate() const { return estimate_from(registers_, nullptr); }

double FmSketch::estimate_union(const FmSketch& other) const {
  if (other.registers_.size() != registers_.size() || other.seed_ != seed_) {
    throw ContractError("cannot unite FM sketches with different registers or seeds");
  }
  return estimate_from(registers_, &other.registers_);
}

bool FmSketch::empty() const {
  for (std::uint32_t w : registers_) {
    if (w) return false;
  }
  return true;
}

}  // namespace netclus
