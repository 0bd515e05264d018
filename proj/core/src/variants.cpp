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

#include "netclus/variants.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "greedy_engine.hpp"
#include "netclus/errors.hpp"

namespace netclus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void finish(GreedyResult& result, const detail::GreedyEngine& engine, Clock::time_point start) {
  result.trajectory_utilities = engine.trajectory_utilities();
  result.utility = engine.total_utility();
  result.covered_trajectories = engine.covered_count();
  result.elapsed_ms = ms_since(start);
}

}  // namespace

CostModel CostModel::uniform(std::span<const NodeId> sites, double c) {
  CostModel model;
  for (NodeId s : sites) model.cost[s] = c;
  return model;
}

double CostModel::of(NodeId site) const {
  auto it = cost.find(site);
  if (it == cost.end() && default_cost) return *default_cost;
  if (it == cost.end()) throw ArgumentError("no cost given for site " + std::to_string(site));
  return it->second;
}

std::size_t CapacityModel::of(NodeId site) const {
  auto it = capacity.find(site);
  return it == capacity.end() ? default_capacity : it->second;
}

GreedyResult tops_cost(const CoverageIndex& cov, const CostModel& costs, double budget) {
  if (!(budget > 0.0)) throw ArgumentError("budget must be positive");
  const auto start = Clock::now();
  const std::size_t n = cov.site_count();
  std::vector<double> cost(n);
  for (std::size_t i = 0; i < n; ++i) {
    cost[i] = costs.of(cov.sites()[i]);
    if (!(cost[i] > 0.0) || !std::isfinite(cost[i])) {
      throw ArgumentError("cost of site " + std::to_string(cov.sites()[i]) +
                          " must be positive and finite");
    }
  }
  const auto fits = [](double c, double remaining) {
    return c <= remaining + 1e-9 * std::max(1.0, remaining);
  };

  detail::GreedyEngine engine(cov);
  std::vector<char> pool(n, 1);
  double remaining = budget;
  GreedyResult result;
  result.stop_reason = StopReason::kCandidatesExhausted;
  for (;;) {
    double cheapest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (pool[i] && !engine.chosen(i)) cheapest = std::min(cheapest, cost[i]);
    }
    if (!std::isfinite(cheapest)) break;
    if (!fits(cheapest, remaining)) {
      result.stop_reason = StopReason::kBudgetExhausted;
      break;
    }
    // Ratio selection, same tie order as the unit-cost greedy.
    std::optional<std::uint32_t> best;
    double best_ratio = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!pool[i] || engine.chosen(i)) continue;
      const double ratio = engine.marginal(i) / cost[i];
      if (!best || detail::beats(ratio, cov.weight(i), i, best_ratio, cov.weight(*best), *best)) {
        best = i;
        best_ratio = ratio;
      }
    }
    const double gain = engine.marginal(*best);
    if (gain <= detail::kZeroGain) {
      result.stop_reason = StopReason::kNoPositiveGain;
      break;
    }
    if (!fits(cost[*best], remaining)) {
      pool[*best] = 0;
      continue;
    }
    engine.select(*best);
    remaining -= cost[*best];
    result.chosen.push_back(cov.sites()[*best]);
    result.chosen_positions.push_back(*best);
    result.gains.push_back(gain);
    result.total_cost += cost[*best];
  }
  finish(result, engine, start);

  // Best single affordable site: U({s}) is its weight.
  std::optional<std::uint32_t> single;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!fits(cost[i], budget)) continue;
    if (!single || detail::beats(cov.weight(i), cov.weight(i), i, cov.weight(*single),
                                 cov.weight(*single), *single)) {
      single = i;
    }
  }
  if (single && cov.weight(*single) > result.utility &&
      !detail::nearly_equal(cov.weight(*single), result.utility)) {
    detail::GreedyEngine alone(cov);
    alone.select(*single);
    GreedyResult swap;
    swap.chosen = {cov.sites()[*single]};
    swap.chosen_positions = {*single};
    swap.gains = {cov.weight(*single)};
    swap.total_cost = cost[*single];
    swap.returned_single_best = true;
    swap.stop_reason = result.stop_reason;
    finish(swap, alone, start);
    return swap;
  }
  return result;
}

GreedyResult tops_capacity(const CoverageIndex& cov, std::size_t k, const CapacityModel& caps) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const auto start = Clock::now();
  const std::size_t n = cov.site_count();
  const std::size_t m = cov.trajectory_count();
  std::vector<std::size_t> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    alpha[i] = std::min(cov.trajectories_covered_by(i).size(), caps.of(cov.sites()[i]));
  }

  std::vector<double> utility(m, 0.0);
  std::vector<std::int64_t> assigned(m, -1);  // index into result.assignments
  std::vector<char> chosen(n, 0);
  GreedyResult result;
  result.stop_reason = StopReason::kReachedK;

  struct Gain {
    double value;
    std::uint32_t trajectory;
    double score;
  };
  const auto top_gains = [&](std::uint32_t i) {
    std::vector<Gain> gains;
    for (const CoverEntry& e : cov.trajectories_covered_by(i)) {
      const double g = e.score - utility[e.index];
      if (g > 0.0) gains.push_back({g, e.index, e.score});
    }
    const std::size_t keep = std::min(alpha[i], gains.size());
    std::partial_sort(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(keep), gains.end(),
                      [](const Gain& a, const Gain& b) {
                        if (a.value != b.value) return a.value > b.value;
                        return a.trajectory < b.trajectory;
                      });
    gains.resize(keep);
    return gains;
  };
  const auto sum = [](const std::vector<Gain>& gains) {
    double total = 0.0;
    for (const Gain& g : gains) total += g.value;
    return total;
  };

  while (result.chosen.size() < k) {
    std::optional<std::uint32_t> best;
    double best_gain = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      const double gain = sum(top_gains(i));
      if (!best || detail::beats(gain, cov.weight(i), i, best_gain, cov.weight(*best), *best)) {
        best = i;
        best_gain = gain;
      }
    }
    if (!best) {
      result.stop_reason = StopReason::kCandidatesExhausted;
      break;
    }
    if (best_gain <= detail::kZeroGain) {
      result.stop_reason = StopReason::kNoPositiveGain;
      break;
    }
    const std::uint32_t s = *best;
    chosen[s] = 1;
    const auto take = top_gains(s);
    const auto slot = static_cast<std::int64_t>(result.assignments.size());
    result.assignments.push_back({cov.sites()[s], {}});
    for (const Gain& g : take) {
      const std::uint32_t j = g.trajectory;
      if (assigned[j] >= 0) {
        auto& prev = result.assignments[static_cast<std::size_t>(assigned[j])].trajectories;
        prev.erase(std::find(prev.begin(), prev.end(), cov.trajectories()[j]));
      }
      assigned[j] = slot;
      utility[j] = g.score;
      result.assignments.back().trajectories.push_back(cov.trajectories()[j]);
    }
    std::sort(result.assignments.back().trajectories.begin(),
              result.assignments.back().trajectories.end());
    result.chosen.push_back(cov.sites()[s]);
    result.chosen_positions.push_back(s);
    result.gains.push_back(sum(take));
  }
  result.trajectory_utilities = utility;
  for (double u : utility) {
    result.utility += u;
    result.covered_trajectories += u > 0.0 ? 1 : 0;
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

GreedyResult tops_with_existing(const CoverageIndex& cov, std::size_t k,
                                std::span<const NodeId> existing) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const auto start = Clock::now();
  detail::GreedyEngine engine(cov);
  for (NodeId e : existing) {
    const auto pos = cov.site_index(e);
    if (!pos) throw ArgumentError("existing service " + std::to_string(e) + " is not a site");
    if (!engine.chosen(*pos)) engine.select(*pos);
  }
  GreedyResult result;
  result.existing_utility = engine.total_utility();
  result.stop_reason = StopReason::kReachedK;
  while (result.chosen.size() < k) {
    const auto best = engine.best();
    if (!best) {
      result.stop_reason = StopReason::kCandidatesExhausted;
      break;
    }
    const double gain = engine.marginal(*best);
    if (gain <= detail::kZeroGain) {
      result.stop_reason = StopReason::kNoPositiveGain;
      break;
    }
    engine.select(*best);
    result.chosen.push_back(cov.sites()[*best]);
    result.chosen_positions.push_back(*best);
    result.gains.push_back(gain);
  }
  finish(result, engine, start);
  result.gain_over_existing = result.utility - result.existing_utility;
  return result;
}

GreedyResult tops_market_share(const CoverageIndex& cov, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw ArgumentError("beta must lie in (0, 1]");
  if (!cov.spec().is_binary()) {
    throw ContractError("market-share selection requires a binary preference, got " +
                        cov.spec().describe());
  }
  const auto start = Clock::now();
  const double m = static_cast<double>(cov.trajectory_count());
  const auto target = static_cast<std::size_t>(std::max(0.0, std::ceil(beta * m - 1e-9)));
  detail::GreedyEngine engine(cov);
  GreedyResult result;
  result.coverage_target = target;
  result.stop_reason = StopReason::kTargetReached;
  while (engine.covered_count() < target) {
    const auto best = engine.best();
    if (!best || engine.marginal(*best) <= detail::kZeroGain) {
      result.infeasible = true;
      result.stop_reason = best ? StopReason::kNoPositiveGain : StopReason::kCandidatesExhausted;
      break;
    }
    result.gains.push_back(engine.marginal(*best));
    engine.select(*best);
    result.chosen.push_back(cov.sites()[*best]);
    result.chosen_positions.push_back(*best);
  }
  finish(result, engine, start);
  return result;
}

}  // namespace netclus
