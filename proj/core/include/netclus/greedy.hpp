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
#include <string>
#include <utility>
#include <vector>

#include "netclus/coverage.hpp"
#include "netclus/fm_sketch.hpp"
#include "netclus/types.hpp"

namespace netclus {

enum class StopReason {
  kReachedK,             // selected the requested number of sites
  kNoPositiveGain,       // every remaining candidate has zero marginal utility
  kCandidatesExhausted,  // no unselected candidate left
  kTargetReached,        // market-share target met
  kBudgetExhausted,      // nothing affordable remains
};

std::string to_string(StopReason reason);

struct Assignment {
  NodeId site;
  std::vector<TrajectoryId> trajectories;  // ascending
};

struct GreedyResult {
  // Selected sites in pick order, as node ids and as coverage positions.
  std::vector<NodeId> chosen;
  std::vector<std::uint32_t> chosen_positions;
  // Marginal utility realized by each pick.
  std::vector<double> gains;
  // Sum of trajectory utilities of the returned set (existing services
  // included when seeded).
  double utility = 0.0;
  // U_j per coverage trajectory position.
  std::vector<double> trajectory_utilities;
  StopReason stop_reason = StopReason::kReachedK;
  double elapsed_ms = 0.0;

  // Sketch-based runs: the estimated marginal used for each pick (0 for picks
  // made by exact marginals after the sketch saturated).
  std::vector<double> estimated_gains;
  // Seeded runs: U(E_S) and utility - U(E_S).
  double existing_utility = 0.0;
  double gain_over_existing = 0.0;
  // Budgeted runs.
  double total_cost = 0.0;
  bool returned_single_best = false;
  // Market-share runs.
  std::size_t covered_trajectories = 0;
  std::size_t coverage_target = 0;
  bool infeasible = false;
  // Capacity runs: x_ji ledger per selected site.
  std::vector<Assignment> assignments;
};

// Greedy maximization of the summed trajectory utility with incremental
// marginal maintenance. Each iteration takes the candidate with the largest
// marginal utility; ties go to the larger site weight, then to the higher
// coverage position. Stops early (fewer than k sites) once no candidate has a
// positive marginal. Throws ArgumentError for k < 1.
GreedyResult inc_greedy(const CoverageIndex& cov, std::size_t k);

// Same loop for binary preferences, with marginals estimated from FM sketches
// of the trajectory covers (sketch of a site united with the running sketch of
// the chosen set). Candidates are scanned in descending order of their own
// estimated cover size and the scan stops once that upper bound cannot beat
// the best marginal found. Once the sketch estimate of every marginal is zero
// the remaining picks use exact marginals, so the run only stops early when
// nothing truly adds coverage. Reported utility and gains are exact. Throws
// ContractError for a non-binary preference.
GreedyResult inc_greedy_fm(const CoverageIndex& cov, std::size_t k,
                           std::size_t registers = FmSketch::kDefaultRegisters,
                           std::uint64_t seed = FmSketch::kDefaultSeed);

}  // namespace netclus
