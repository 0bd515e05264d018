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

#include "netclus/coverage.hpp"
#include "netclus/preference.hpp"
#include "netclus/road_network.hpp"
#include "netclus/trajectory_store.hpp"

namespace netclus {

struct OracleResult {
  std::vector<std::uint32_t> chosen_positions;  // ascending
  std::vector<NodeId> chosen;
  double utility = 0.0;
  std::uint64_t subsets = 0;
};

inline constexpr std::uint64_t kDefaultSubsetGuard = 10'000'000;

// Number of k-subsets of n items, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Exact optimum over every k-subset of the sites (k is clamped to n). Among
// equal utilities the lexicographically smallest position set wins. Throws
// GuardError when C(n, k) exceeds `guard`, ArgumentError for k < 1.
OracleResult brute_force_optimal(const CoverageIndex& cov, std::size_t k,
                                 std::uint64_t guard = kDefaultSubsetGuard);

inline constexpr std::size_t kOracleNodeGuard = 2000;

// Covers computed from Floyd-Warshall all-pairs distances and the detour
// definition applied pair by pair. Independent of the Dijkstra-based path.
// Throws GuardError above kOracleNodeGuard nodes.
CoverageIndex exact_coverage_oracle(const RoadNetwork& net, const TrajectoryStore& store,
                                    const PreferenceSpec& spec);

// All-pairs shortest distances, row-major N x N.
std::vector<Meters> floyd_warshall(const RoadNetwork& net);

}  // namespace netclus
