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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netclus/coverage.hpp"

namespace netclus::detail {

// Marginals at or below this are treated as zero. Incremental updates leave
// rounding residue of order m * 1e-16.
inline constexpr double kZeroGain = 1e-9;

inline bool nearly_equal(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

// Selection order shared by every greedy variant: larger score first, then
// larger weight, then higher position.
inline bool beats(double score, double weight, std::uint32_t pos, double best_score,
                  double best_weight, std::uint32_t best_pos) {
  if (!nearly_equal(score, best_score)) return score > best_score;
  if (!nearly_equal(weight, best_weight)) return weight > best_weight;
  return pos > best_pos;
}

// Working state of the incremental greedy: per-site marginal utility U(s_i),
// per-trajectory utility U_j, and alpha_ji kept alongside each SC entry.
class GreedyEngine {
 public:
  explicit GreedyEngine(const CoverageIndex& cov)
      : cov_(cov),
        marginal_(cov.site_count()),
        chosen_(cov.site_count(), 0),
        utility_(cov.trajectory_count(), 0.0),
        alpha_(cov.trajectory_count()) {
    for (std::size_t i = 0; i < cov.site_count(); ++i) marginal_[i] = cov.weight(i);
    for (std::size_t j = 0; j < cov.trajectory_count(); ++j) {
      auto sc = cov.sites_covering(j);
      alpha_[j].reserve(sc.size());
      for (const CoverEntry& e : sc) alpha_[j].push_back(e.score);
    }
  }

  // Candidate with the best marginal among unselected sites for which
  // allowed(pos) holds, or nullopt.
  template <typename Allowed>
  std::optional<std::uint32_t> best(Allowed allowed) const {
    std::optional<std::uint32_t> best;
    for (std::uint32_t i = 0; i < marginal_.size(); ++i) {
      if (chosen_[i] || !allowed(i)) continue;
      if (!best ||
          beats(marginal_[i], cov_.weight(i), i, marginal_[*best], cov_.weight(*best), *best)) {
        best = i;
      }
    }
    return best;
  }

  std::optional<std::uint32_t> best() const {
    return best([](std::uint32_t) { return true; });
  }

  // Adds site `s` to the chosen set and propagates the utility change.
  void select(std::uint32_t s) {
    chosen_[s] = 1;
    for (const CoverEntry& tc : cov_.trajectories_covered_by(s)) {
      const std::uint32_t j = tc.index;
      if (!(tc.score > utility_[j])) continue;
      utility_[j] = tc.score;
      auto sc = cov_.sites_covering(j);
      for (std::size_t k = 0; k < sc.size(); ++k) {
        const std::uint32_t i = sc[k].index;
        if (chosen_[i]) continue;
        const double updated = std::max(0.0, sc[k].score - utility_[j]);
        marginal_[i] -= alpha_[j][k] - updated;
        alpha_[j][k] = updated;
      }
    }
  }

  double marginal(std::uint32_t i) const { return marginal_[i]; }
  bool chosen(std::uint32_t i) const { return chosen_[i] != 0; }
  const std::vector<double>& trajectory_utilities() const { return utility_; }

  double total_utility() const {
    double total = 0.0;
    for (double u : utility_) total += u;
    return total;
  }

  std::size_t covered_count() const {
    std::size_t n = 0;
    for (double u : utility_) n += u > 0.0 ? 1 : 0;
    return n;
  }

 private:
  const CoverageIndex& cov_;
  std::vector<double> marginal_;
  std::vector<char> chosen_;
  std::vector<double> utility_;
  std::vector<std::vector<double>> alpha_;
};

}  // namespace netclus::detail
