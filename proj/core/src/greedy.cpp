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

#include "netclus/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "greedy_engine.hpp"
#include "netclus/errors.hpp"

namespace netclus {

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kReachedK:
      return "reached_k";
    case StopReason::kNoPositiveGain:
      return "no_positive_gain";
    case StopReason::kCandidatesExhausted:
      return "candidates_exhausted";
    case StopReason::kTargetReached:
      return "target_reached";
    case StopReason::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

GreedyResult inc_greedy(const CoverageIndex& cov, std::size_t k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const auto start = Clock::now();
  detail::GreedyEngine engine(cov);
  GreedyResult result;
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
  result.trajectory_utilities = engine.trajectory_utilities();
  result.utility = engine.total_utility();
  result.covered_trajectories = engine.covered_count();
  result.elapsed_ms = ms_since(start);
  return result;
}

GreedyResult inc_greedy_fm(const CoverageIndex& cov, std::size_t k, std::size_t registers,
                           std::uint64_t seed) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  if (!cov.spec().is_binary()) {
    throw ContractError("sketch-based greedy requires a binary preference, got " +
                        cov.spec().describe());
  }
  const auto start = Clock::now();
  const std::size_t n = cov.site_count();

  std::vector<FmSketch> sketches(n, FmSketch(registers, seed));
  std::vector<double> own(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const CoverEntry& e : cov.trajectories_covered_by(i)) {
      sketches[i].insert(static_cast<std::uint64_t>(cov.trajectories()[e.index]));
    }
    own[i] = sketches[i].estimate();
  }
  // Scan order: own estimate descending, then the usual tie order.
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (own[a] != own[b]) return own[a] > own[b];
    if (cov.weight(a) != cov.weight(b)) return cov.weight(a) > cov.weight(b);
    return a > b;
  });

  FmSketch chosen_sketch(registers, seed);
  std::vector<char> chosen(n, 0);
  std::vector<double> utility(cov.trajectory_count(), 0.0);
  GreedyResult result;
  result.stop_reason = StopReason::kReachedK;
  while (result.chosen.size() < k) {
    const double base = chosen_sketch.estimate();
    std::optional<std::uint32_t> best;
    double best_gain = 0.0;
    bool any_left = false;
    for (std::uint32_t i : order) {
      if (chosen[i]) continue;
      any_left = true;
      // The union never adds more than the site's own cover.
      if (best && own[i] < best_gain && !detail::nearly_equal(own[i], best_gain)) break;
      const double gain = chosen_sketch.estimate_union(sketches[i]) - base;
      if (!best || detail::beats(gain, cov.weight(i), i, best_gain, cov.weight(*best), *best)) {
        best = i;
        best_gain = gain;
      }
    }
    if (!any_left) {
      result.stop_reason = StopReason::kCandidatesExhausted;
      break;
    }
    if (best_gain <= detail::kZeroGain) {
      // The union sketch no longer moves, which says nothing about the true
      // marginals. Pick by exact marginals from the running utilities instead.
      best.reset();
      double best_exact = 0.0;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        double g = 0.0;
        for (const CoverEntry& e : cov.trajectories_covered_by(i)) {
          g += std::max(0.0, e.score - utility[e.index]);
        }
        if (!best || detail::beats(g, cov.weight(i), i, best_exact, cov.weight(*best), *best)) {
          best = i;
          best_exact = g;
        }
      }
      if (!best || best_exact <= detail::kZeroGain) {
        result.stop_reason = StopReason::kNoPositiveGain;
        break;
      }
      best_gain = 0.0;
    }
    const std::uint32_t s = *best;
    chosen[s] = 1;
    chosen_sketch.merge(sketches[s]);
    double gain = 0.0;
    for (const CoverEntry& e : cov.trajectories_covered_by(s)) {
      if (e.score > utility[e.index]) {
        gain += e.score - utility[e.index];
        utility[e.index] = e.score;
      }
    }
    result.chosen.push_back(cov.sites()[s]);
    result.chosen_positions.push_back(s);
    result.gains.push_back(gain);
    result.estimated_gains.push_back(best_gain);
  }
  result.trajectory_utilities = utility;
  result.utility = std::accumulate(utility.begin(), utility.end(), 0.0);
  result.covered_trajectories = static_cast<std::size_t>(
      std::count_if(utility.begin(), utility.end(), [](double u) { return u > 0.0; }));
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace netclus
