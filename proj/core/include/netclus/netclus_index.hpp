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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netclus/fm_sketch.hpp"
#include "netclus/road_network.hpp"
#include "netclus/trajectory_store.hpp"
#include "netclus/types.hpp"

namespace netclus {

using ClusterId = std::uint32_t;

struct ClusterMember {
  NodeId node;
  Meters round_trip;  // to the center
  friend bool operator==(const ClusterMember&, const ClusterMember&) = default;
};

struct TrajectoryEntry {
  TrajectoryId id;
  Meters detour;  // d_r(T, center)
  friend bool operator==(const TrajectoryEntry&, const TrajectoryEntry&) = default;
};

struct Neighbor {
  ClusterId cluster;
  Meters round_trip;  // between the two centers
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Cluster {
  ClusterId id = 0;
  NodeId center = 0;
  std::optional<NodeId> representative;
  Meters representative_round_trip = 0.0;
  std::vector<ClusterMember> members;         // ascending node id
  std::vector<TrajectoryEntry> trajectories;  // TL, ascending trajectory id
  std::vector<Neighbor> neighbors;            // CL, ascending round trip then id

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct InstanceStats {
  std::size_t clusters = 0;           // eta_p
  double mean_dominating_set = 0.0;   // mean |Lambda(v)| over nodes
  double mean_trajectory_list = 0.0;  // mean |TL|
  double mean_neighbor_list = 0.0;    // mean |CL|
  std::size_t max_trajectories = 0;   // xi_p
  std::size_t max_nodes = 0;          // lambda_p
  double build_seconds = 0.0;
};

struct IndexInstance {
  int p = 0;
  Meters radius = 0.0;
  std::vector<Cluster> clusters;
  std::vector<ClusterId> cluster_of;  // node -> cluster
  // CC: clusters traversed by each trajectory, consecutive repeats collapsed.
  std::map<TrajectoryId, std::vector<ClusterId>> sequences;
  InstanceStats stats;

  std::size_t max_neighbor_list() const;
  std::size_t max_trajectory_list() const;
  void refresh_stats();
};

enum class Counting { kExact, kFm };

struct GdspOptions {
  Counting counting = Counting::kExact;
  std::size_t fm_registers = FmSketch::kDefaultRegisters;
  std::uint64_t fm_seed = FmSketch::kDefaultSeed;
};

struct GdspResult {
  std::vector<Cluster> clusters;  // centers and members only
  double mean_dominating_set = 0.0;
};

// Greedy clustering for the generalized dominating set problem: repeatedly
// take the unclustered node whose 2R round-trip ball holds the most
// unclustered nodes (ties to the lowest id) and cluster those nodes around it.
// Throws ArgumentError unless radius > 0.
GdspResult greedy_gdsp(const RoadNetwork& net, Meters radius, const GdspOptions& options = {});

// The candidate-site member closest (round trip) to the center, ties to the
// lowest id. Empty when the cluster holds no site.
std::optional<NodeId> choose_representative(const Cluster& cluster, const RoadNetwork& net);

struct BuildOptions {
  double gamma = 0.75;
  std::optional<Meters> tau_min;
  std::optional<Meters> tau_max;
  GdspOptions gdsp;
  // Above this many sites the default tau range is estimated instead of
  // computed from all site pairs.
  std::size_t exact_range_limit = 2048;
  std::size_t range_samples = 16;
  std::uint64_t range_seed = 7;
};

// Edge joining a newly created node to the existing network.
struct Attachment {
  NodeId neighbor;
  Meters to_neighbor;    // new -> neighbor
  Meters from_neighbor;  // neighbor -> new
};

struct UpdateReport {
  std::size_t clusters_created = 0;
  std::size_t representatives_changed = 0;
  std::size_t trajectory_entries = 0;  // TL entries added or removed
  UpdateReport& operator+=(const UpdateReport& other);
};

// Multi-resolution index. Instance p clusters the network at radius
// R_p = (1+gamma)^p * tau_min / 4 and serves thresholds in [4R_p, 4R_p(1+gamma)).
// Holds its own copy of the network, sites and trajectories. Updates need
// exclusive access; const members may be used concurrently.
class NetClusIndex {
 public:
  NetClusIndex() = default;

  double gamma() const { return gamma_; }
  Meters tau_min() const { return tau_min_; }
  Meters tau_max() const { return tau_max_; }
  std::size_t instance_count() const { return instances_.size(); }
  const IndexInstance& instance(std::size_t p) const { return instances_.at(p); }
  const std::vector<IndexInstance>& instances() const { return instances_; }
  const RoadNetwork& network() const { return net_; }
  const TrajectoryStore& trajectories() const { return store_; }
  const GdspOptions& gdsp_options() const { return gdsp_; }

  // Updates, applied to every instance. Unknown or conflicting ids throw
  // ArgumentError and leave the index unchanged.
  UpdateReport add_site(NodeId site);
  // Creates a node joined by `edges`, tags it as a site and returns its id.
  // The new node joins the cluster whose center is nearest by the estimate
  // through its neighbors, or starts its own cluster when that estimate
  // exceeds 2R_p. Existing stored distances are not revised.
  NodeId add_site_node(std::span<const Attachment> edges, UpdateReport* report = nullptr);
  UpdateReport remove_site(NodeId site);
  UpdateReport add_trajectory(const Trajectory& t);
  UpdateReport remove_trajectory(TrajectoryId id);
  // Searches for the whole batch run in parallel.
  UpdateReport add_trajectories(std::span<const Trajectory> batch);

  friend NetClusIndex build_index(RoadNetwork net, TrajectoryStore store,
                                  const BuildOptions& options);
  friend void save_index(const std::filesystem::path& dir, const NetClusIndex& index);
  friend NetClusIndex load_index(const std::filesystem::path& dir);

  // For hand-built instances in tests and tools.
  static NetClusIndex from_parts(double gamma, Meters tau_min, Meters tau_max, RoadNetwork net,
                                 TrajectoryStore store, std::vector<IndexInstance> instances);

 private:
  bool refresh_representative(Cluster& cluster);
  std::size_t index_trajectory(const Trajectory& t, const TrajectoryProbe& probe);
  void refresh_stats();

  double gamma_ = 0.75;
  Meters tau_min_ = 0.0;
  Meters tau_max_ = 0.0;
  GdspOptions gdsp_;
  RoadNetwork net_;
  TrajectoryStore store_;
  std::vector<IndexInstance> instances_;
};

// t = floor(log_{1+gamma}(tau_max / tau_min)) + 1, computed without
// floating-point log so exact powers land on the right side.
std::size_t instance_count_for(double gamma, Meters tau_min, Meters tau_max);

// Default threshold range: smallest and largest site-pair round trips.
struct TauRange {
  Meters tau_min;
  Meters tau_max;
  bool exact;
};
TauRange default_tau_range(const RoadNetwork& net, const BuildOptions& options);

// Throws ConfigError unless 0 < gamma <= 1 and tau_min < tau_max.
NetClusIndex build_index(RoadNetwork net, TrajectoryStore store, const BuildOptions& options = {});

// Directory layout: network.txt, sites.txt, trajectories.txt, index.txt.
inline constexpr int kIndexFormatVersion = 1;
void save_index(const std::filesystem::path& dir, const NetClusIndex& index);
NetClusIndex load_index(const std::filesystem::path& dir);

void write_index_stats(std::ostream& out, const NetClusIndex& index);

}  // namespace netclus
