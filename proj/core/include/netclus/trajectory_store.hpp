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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "netclus/road_network.hpp"
#include "netclus/types.hpp"

namespace netclus {

struct Trajectory {
  TrajectoryId id = 0;
  std::vector<NodeId> nodes;
};

// Builds a trajectory with consecutive duplicate nodes collapsed. Throws
// ValidationError for an empty node list.
Trajectory make_trajectory(TrajectoryId id, std::span<const NodeId> nodes);

class TrajectoryStore {
 public:
  // Throws ValidationError on duplicate id or empty trajectory.
  void add(Trajectory t);
  bool remove(TrajectoryId id);

  std::size_t size() const { return trajectories_.size(); }
  bool empty() const { return trajectories_.empty(); }
  const Trajectory& operator[](std::size_t i) const { return trajectories_[i]; }
  const Trajectory* find(TrajectoryId id) const;
  std::optional<std::size_t> index_of(TrajectoryId id) const;

  auto begin() const { return trajectories_.begin(); }
  auto end() const { return trajectories_.end(); }

 private:
  std::vector<Trajectory> trajectories_;
  std::unordered_map<TrajectoryId, std::size_t> by_id_;
};

// Format: one trajectory per line, `traj_id l v1 ... vl`.
TrajectoryStore load_trajectories(const std::filesystem::path& file, const RoadNetwork& net);
TrajectoryStore parse_trajectories(std::istream& in, const RoadNetwork& net,
                                   const std::string& name = "trajectories");
// Parses a single `traj_id l v1 ... vl` record.
Trajectory parse_trajectory_line(const std::string& line, const RoadNetwork& net);
void write_trajectories(std::ostream& out, const TrajectoryStore& store);

// Shortest network distances d(v_k, v_l) between positions k <= l of one
// trajectory.
class LegDistances {
 public:
  LegDistances() = default;
  LegDistances(const RoadNetwork& net, const Trajectory& t);

  std::size_t length() const { return length_; }
  Meters at(std::size_t k, std::size_t l) const { return d_[k * length_ + l]; }

 private:
  std::size_t length_ = 0;
  std::vector<Meters> d_;
};

// Extra round-trip distance for a traveller on `t` to visit the site:
//   min over positions k <= l of d(v_k, s) + d(s, v_l) - d(v_k, v_l),
// clamped at 0. `to_site` holds d(v, s) (reverse search from s) and
// `from_site` holds d(s, v) (forward search from s).
Meters detour_distance(const Trajectory& t, const LegDistances& legs, const DistanceMap& from_site,
                       const DistanceMap& to_site);

// Same quantity, running the required searches itself.
Meters detour_distance(const RoadNetwork& net, const Trajectory& t, NodeId site);

// Forward and reverse searches from every node of one trajectory. Answers
// detour_distance for arbitrary targets without per-target searches, which is
// what the index needs for trajectory-to-center distances.
class TrajectoryProbe {
 public:
  TrajectoryProbe(const RoadNetwork& net, const Trajectory& t);

  Meters detour_to(NodeId target) const;
  const LegDistances& legs() const { return legs_; }

 private:
  std::vector<std::size_t> slot_;  // position -> distinct-node slot
  std::vector<DistanceMap> from_node_;
  std::vector<DistanceMap> to_node_;
  LegDistances legs_;
};

struct DistanceEntry {
  std::uint32_t index;  // site or trajectory position, depending on the view
  Meters distance;
};

struct PrecomputeStats {
  std::size_t pairs = 0;
  std::size_t bytes = 0;
  double seconds = 0.0;
};

// Site-trajectory detour distances not exceeding `cutoff`, kept in two
// transposed views each sorted ascending by distance (ties by index).
struct SiteTrajectoryDistances {
  Meters cutoff = 0.0;
  std::vector<NodeId> sites;               // ascending
  std::vector<TrajectoryId> trajectories;  // store order
  std::vector<std::vector<DistanceEntry>> by_site;
  std::vector<std::vector<DistanceEntry>> by_trajectory;
  PrecomputeStats stats;
};

SiteTrajectoryDistances precompute_site_trajectory_distances(const RoadNetwork& net,
                                                             const TrajectoryStore& store,
                                                             Meters cutoff);

// Versioned text artifact. The loader throws ValidationError on a version or
// magic mismatch.
inline constexpr int kDistancesFormatVersion = 1;
void write_distances(std::ostream& out, const SiteTrajectoryDistances& dist);
SiteTrajectoryDistances read_distances(std::istream& in, const std::string& name = "distances");

}  // namespace netclus
