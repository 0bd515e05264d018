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
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>

#include "netclus/coverage.hpp"
#include "netclus/greedy.hpp"
#include "netclus/types.hpp"

namespace netclus {

// Per-site deployment cost. Sites not listed get `default_cost`; without a
// default every candidate site must be listed.
struct CostModel {
  std::unordered_map<NodeId, double> cost;
  std::optional<double> default_cost;

  static CostModel uniform(std::span<const NodeId> sites, double c = 1.0);
  double of(NodeId site) const;
};

// Per-site capacity; sites not listed get `default_capacity`.
struct CapacityModel {
  static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();
  std::unordered_map<NodeId, std::size_t> capacity;
  std::size_t default_capacity = kUnlimited;

  std::size_t of(NodeId site) const;
};

// Budgeted selection: ratio greedy (marginal utility per unit cost) over the
// sites that still fit the remaining budget, compared against the best single
// affordable site. Returns the better of the two; the ratio set wins ties.
GreedyResult tops_cost(const CoverageIndex& cov, const CostModel& costs, double budget);

// Capacitated selection: a site serves at most its capacity of trajectories.
// A candidate's marginal is the sum of its top-capacity positive gains
// (max(0, psi_ji - U_j)); the picked site is assigned exactly those
// trajectories. A trajectory reassigned to a better site leaves the previous
// site's ledger; the freed slot is not refilled.
GreedyResult tops_capacity(const CoverageIndex& cov, std::size_t k, const CapacityModel& caps);

// Selection on top of already deployed services. Trajectory utilities start
// from the existing sites, which are never candidates. Throws ArgumentError
// for an existing site that is not in the cover.
GreedyResult tops_with_existing(const CoverageIndex& cov, std::size_t k,
                                std::span<const NodeId> existing);

// Fewest sites (greedy) covering at least ceil(beta * m) trajectories under
// the binary preference. Sets `infeasible` when no further site adds coverage
// before the target is met. Throws ArgumentError unless 0 < beta <= 1.
GreedyResult tops_market_share(const CoverageIndex& cov, double beta);

}  // namespace netclus
