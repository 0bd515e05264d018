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

#include "netclus/coverage.hpp"

#include <algorithm>

#include "netclus/errors.hpp"
#include "text_io.hpp"

namespace netclus {

CoverageIndex::CoverageIndex(std::vector<NodeId> sites, std::vector<TrajectoryId> trajectories,
                             PreferenceSpec spec, std::vector<ScoredPair> pairs)
    : sites_(std::move(sites)),
      trajectories_(std::move(trajectories)),
      spec_(std::move(spec)),
      tc_(sites_.size()),
      sc_(trajectories_.size()),
      weights_(sites_.size(), 0.0) {
  std::erase_if(pairs, [](const ScoredPair& p) { return !(p.score > 0.0); });
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.site != b.site) return a.site < b.site;
    if (a.trajectory != b.trajectory) return a.trajectory < b.trajectory;
    return a.score > b.score;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const ScoredPair& a, const ScoredPair& b) {
                            return a.site == b.site && a.trajectory == b.trajectory;
                          }),
              pairs.end());
  for (const ScoredPair& p : pairs) {
    if (p.site >= sites_.size() || p.trajectory >= trajectories_.size()) {
      throw ArgumentError("scored pair references a position outside the coverage universe");
    }
    tc_[p.site].push_back({p.trajectory, p.score});
    sc_[p.trajectory].push_back({p.site, p.score});
  }
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    double w = 0.0;
    for (const CoverEntry& e : tc_[i]) w += e.score;
    weights_[i] = w;
  }
  pair_count_ = pairs.size();
  for (std::uint32_t i = 0; i < sites_.size(); ++i) {
    if (!site_pos_.emplace(sites_[i], i).second) {
      throw ArgumentError("duplicate site " + std::to_string(sites_[i]) + " in coverage universe");
    }
  }
}

std::optional<std::uint32_t> CoverageIndex::site_index(NodeId site) const {
  auto it = site_pos_.find(site);
  if (it == site_pos_.end()) return std::nullopt;
  return it->second;
}

CoverageIndex build_coverage(const SiteTrajectoryDistances& dist, const PreferenceSpec& spec) {
  if (spec.tau() > dist.cutoff) {
    throw ConfigError("coverage threshold " + detail::format_double(spec.tau()) +
                      " exceeds the precomputation cutoff " + detail::format_double(dist.cutoff));
  }
  std::vector<ScoredPair> pairs;
  for (std::uint32_t i = 0; i < dist.by_site.size(); ++i) {
    for (const DistanceEntry& e : dist.by_site[i]) {
      if (e.distance > spec.tau()) break;  // ascending
      pairs.push_back({i, e.index, spec.score(e.distance)});
    }
  }
  return CoverageIndex(dist.sites, dist.trajectories, spec, std::move(pairs));
}

double utility_of(const CoverageIndex& cov, std::span<const std::uint32_t> site_positions) {
  std::vector<double> best(cov.trajectory_count(), 0.0);
  for (std::uint32_t i : site_positions) {
    for (const CoverEntry& e : cov.trajectories_covered_by(i)) {
      best[e.index] = std::max(best[e.index], e.score);
    }
  }
  double total = 0.0;
  for (double u : best) total += u;
  return total;
}

std::shared_ptr<const CoverageIndex> CoverageCache::get(const PreferenceSpec& spec) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(spec.tau(), spec.describe());
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  auto built = std::make_shared<const CoverageIndex>(build_coverage(dist_, spec));
  entries_.emplace(std::move(key), built);
  return built;
}

std::size_t CoverageCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace netclus
