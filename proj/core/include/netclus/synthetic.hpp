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

#include "netclus/road_network.hpp"
#include "netclus/trajectory_store.hpp"

namespace netclus {

enum class Topology { kGrid, kStar, kPoly };

Topology parse_topology(const std::string& text);

struct SyntheticOptions {
  Topology topology = Topology::kGrid;
  // grid: lattice width x height; star: `width` arms of `height` nodes around
  // a hub; poly: `patches` width x height lattices bridged in a chain.
  std::size_t width = 10;
  std::size_t height = 10;
  std::size_t patches = 3;
  Meters edge_length = 1.0;
  std::size_t trajectories = 50;
  std::size_t walk_length = 20;
  std::uint64_t seed = 1;
  bool all_sites = true;
};

struct SyntheticDataset {
  RoadNetwork network;
  TrajectoryStore trajectories;
};

// Bidirectional road network of the requested shape with random-walk
// trajectories (no immediate backtracking unless at a dead end). Trajectory
// ids run 0..m-1. Identical options give identical datasets.
SyntheticDataset generate_synthetic(const SyntheticOptions& options);

RoadNetwork make_grid(std::size_t width, std::size_t height, Meters edge_length = 1.0);

}  // namespace netclus
