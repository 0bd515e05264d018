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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netclus/preference.hpp"
#include "netclus/trajectory_store.hpp"
#include "netclus/types.hpp"

namespace netclus {

struct CoverEntry {
  std::uint32_t index;  // trajectory position in TC lists, site position in SC lists
  double score;
};

struct ScoredPair {
  std::uint32_t site;
  std::uint32_t trajectory;
  double score;
};

// Trajectory covers TC(s), site covers SC(T) and site weights for one
// (tau, preference) pair. Sites and trajectories are addressed by position;
// ids are kept alongside. Only pairs with a positive score are stored.
class CoverageIndex {
 public:
  CoverageIndex() = default;
  // Pairs with score <= 0 are dropped. A repeated (site, trajectory) pair
  // keeps its highest score.
  CoverageIndex(std::vector<NodeId> sites, std::vector<TrajectoryId> trajectories,
                PreferenceSpec spec, std::vector<ScoredPair> pairs);

  std::size_t site_count() const { return sites_.size(); }
  std::size_t trajectory_count() const { return trajectories_.size(); }
  const std::vector<NodeId>& sites() const { return sites_; }
  const std::vector<TrajectoryId>& trajectories() const { return trajectories_; }
  std::optional<std::uint32_t> site_index(NodeId site) const;

  // TC(s_i), ascending trajectory position.
  std::span<const CoverEntry> trajectories_covered_by(std::size_t site) const { return tc_[site]; }
  // SC(T_j), ascending site position.
  std::span<const CoverEntry> sites_covering(std::size_t trajectory) const {
    return sc_[trajectory];
  }
  double weight(std::size_t site) const { return weights_[site]; }
  std::size_t pair_count() const { return pair_count_; }

  const PreferenceSpec& spec() const { return spec_; }
  Meters tau() const { return spec_.tau(); }

 private:
  std::vector<NodeId> sites_;
  std::vector<TrajectoryId> trajectories_;
  PreferenceSpec spec_ = PreferenceSpec::binary(0.0);
  std::vector<std::vector<CoverEntry>> tc_;
  std::vector<std::vector<CoverEntry>> sc_;
  std::vector<double> weights_;
  std::unordered_map<NodeId, std::uint32_t> site_pos_;
  std::size_t pair_count_ = 0;
};

// Materializes the covers from precomputed distances. Throws ConfigError when
// spec.tau() exceeds the precomputation cutoff.
CoverageIndex build_coverage(const SiteTrajectoryDistances& dist, const PreferenceSpec& spec);

// U(Q) = sum over trajectories of the best score offered by a site in Q.
double utility_of(const CoverageIndex& cov, std::span<const std::uint32_t> site_positions);

// Memoizes build_coverage per (tau, preference) for repeated interactive
// queries against one distance table. Thread-safe.
class CoverageCache {
 public:
  explicit CoverageCache(const SiteTrajectoryDistances& dist) : dist_(dist) {}
  std::shared_ptr<const CoverageIndex> get(const PreferenceSpec& spec);
  std::size_t size() const;

 private:
  const SiteTrajectoryDistances& dist_;
  mutable std::mutex mu_;
  std::map<std::pair<Meters, std::string>, std::shared_ptr<const CoverageIndex>> entries_;
};

}  // namespace netclus
