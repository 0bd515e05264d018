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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netclus/coverage.hpp"
#include "netclus/greedy.hpp"
#include "netclus/netclus_index.hpp"
#include "netclus/preference.hpp"
#include "netclus/variants.hpp"

namespace netclus {

enum class Verdict {
  kInstance,       // answered on instance p
  kFallbackExact,  // tau below the indexed range: exact greedy on full covers
  kAnyK,           // tau at or above tau_max
};

std::string to_string(Verdict v);

struct InstanceChoice {
  Verdict verdict = Verdict::kInstance;
  std::size_t p = 0;  // meaningful for kInstance (and kAnyK: coarsest instance)
};

// Instance p with 4R_p <= tau < 4R_p(1+gamma). Throws ArgumentError unless
// tau > 0.
InstanceChoice select_instance(const NetClusIndex& index, Meters tau);

// A service placed at an arbitrary node, scored alongside the representatives.
struct ExtraSite {
  NodeId node;
  ClusterId cluster;
  Meters round_trip;  // to the cluster center
};

struct ApproxCoverageStats {
  std::size_t accesses = 0;  // TL and CL entries examined
  std::size_t bound = 0;     // eta_p * (1 + max|CL|) * max|TL|
};

// Covers over the cluster representatives of `inst` using the estimate
//   d_r(T, c_j) + d_r(c_j, c_i) + d_r(c_i, r_i)
// minimized over the clusters g_j in {g_i} and CL(g_i) that T passes through.
// Clusters without a representative are skipped. `extras` are scored the same
// way from their own cluster. Trajectories are all keys of the instance CC map.
CoverageIndex approx_coverage(const IndexInstance& inst, const PreferenceSpec& spec,
                              std::span<const ExtraSite> extras = {},
                              ApproxCoverageStats* stats = nullptr);

// Estimated detour of trajectory `t` to the representative of cluster
// `target`, or kUnreachable when no qualifying traversed cluster exists.
Meters approx_detour(const IndexInstance& inst, TrajectoryId t, ClusterId target);

enum class Variant { kTops, kCost, kCapacity, kExisting, kMarketShare };
enum class Method { kNetClus, kIncGreedy, kFmNetClus, kFmGreedy };

std::string to_string(Variant v);
std::string to_string(Method m);
Variant parse_variant(const std::string& text);
Method parse_method(const std::string& text);

struct QueryParams {
  std::size_t k = 5;
  PreferenceSpec spec = PreferenceSpec::binary(800.0);
  Variant variant = Variant::kTops;
  Method method = Method::kNetClus;
  double budget = 0.0;
  double beta = 0.0;
  CostModel costs;
  CapacityModel capacities;
  std::vector<NodeId> existing;
  std::size_t fm_registers = FmSketch::kDefaultRegisters;
  std::uint64_t fm_seed = FmSketch::kDefaultSeed;
  // Also score the chosen sites against exact detours (QueryResult::exact_utility).
  bool evaluate_exact = false;
};

struct QueryResult {
  GreedyResult greedy;
  // Empty for the exact methods, which do not consult the index instances.
  std::optional<InstanceChoice> choice;
  std::size_t trajectory_count = 0;  // m
  std::size_t candidate_count = 0;   // sites competing in the greedy
  std::size_t cover_pairs = 0;       // (site, trajectory) pairs in the cover
  ApproxCoverageStats coverage_stats;
  double utility_pct = 0.0;  // 100 * U / m
  // Utility of the chosen sites under exact detours, when requested.
  std::optional<double> exact_utility;
};

// Answers a query against the index. NetClus methods choose an instance and
// run the greedy (or variant) over approximate representative covers; the
// exact methods compute full covers from the index's network and
// trajectories. Existing services outside the representative set are added
// to the cover as extra sites.
QueryResult tops_cluster_query(const NetClusIndex& index, const QueryParams& params);

// Exact covers for every site of the index at the query threshold.
CoverageIndex exact_coverage(const NetClusIndex& index, const PreferenceSpec& spec);

// U(sites) under exact detour distances. Runs one pair of searches per site
// and per distinct trajectory node.
double evaluate_sites(const RoadNetwork& net, const TrajectoryStore& store,
                      std::span<const NodeId> sites, const PreferenceSpec& spec);

// Runs the selected variant on a prepared cover.
GreedyResult run_variant(const CoverageIndex& cov, const QueryParams& params, bool sketch);

}  // namespace netclus
