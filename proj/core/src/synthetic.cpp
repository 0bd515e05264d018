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

#include "netclus/synthetic.hpp"

#include <random>
#include <vector>

#include "netclus/errors.hpp"

namespace netclus {

namespace {

void link(RoadNetwork& net, NodeId a, NodeId b, Meters w) {
  net.add_edge(a, b, w);
  net.add_edge(b, a, w);
}

void lay_grid(RoadNetwork& net, NodeId base, std::size_t width, std::size_t height, Meters w) {
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const auto v = static_cast<NodeId>(base + y * width + x);
      if (x + 1 < width) link(net, v, v + 1, w);
      if (y + 1 < height) link(net, v, static_cast<NodeId>(v + width), w);
    }
  }
}

// Uniform draw in [0, n) by modulo: portable across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

Topology parse_topology(const std::string& text) {
  if (text == "grid") return Topology::kGrid;
  if (text == "star") return Topology::kStar;
  if (text == "poly") return Topology::kPoly;
  throw ArgumentError("unknown topology `" + text + "` (grid|star|poly)");
}

RoadNetwork make_grid(std::size_t width, std::size_t height, Meters edge_length) {
  RoadNetwork net(width * height);
  lay_grid(net, 0, width, height, edge_length);
  return net;
}

SyntheticDataset generate_synthetic(const SyntheticOptions& o) {
  if (o.width == 0 || o.height == 0) throw ArgumentError("width and height must be positive");
  if (o.walk_length == 0) throw ArgumentError("walk length must be positive");
  if (o.topology == Topology::kPoly && o.patches == 0)
    throw ArgumentError("need at least one patch");

  SyntheticDataset out;
  RoadNetwork& net = out.network;
  switch (o.topology) {
    case Topology::kGrid:
      net = make_grid(o.width, o.height, o.edge_length);
      break;
    case Topology::kStar: {
      net = RoadNetwork(1 + o.width * o.height);
      for (std::size_t a = 0; a < o.width; ++a) {
        NodeId prev = 0;
        for (std::size_t i = 0; i < o.height; ++i) {
          const auto v = static_cast<NodeId>(1 + a * o.height + i);
          link(net, prev, v, o.edge_length);
          prev = v;
        }
      }
      break;
    }
    case Topology::kPoly: {
      const std::size_t size = o.width * o.height;
      net = RoadNetwork(o.patches * size);
      for (std::size_t p = 0; p < o.patches; ++p) {
        lay_grid(net, static_cast<NodeId>(p * size), o.width, o.height, o.edge_length);
        if (p + 1 < o.patches) {
          // Right end of the middle row to the left end of the next patch.
          const std::size_t row = o.height / 2;
          const auto from = static_cast<NodeId>(p * size + row * o.width + o.width - 1);
          const auto to = static_cast<NodeId>((p + 1) * size + row * o.width);
          link(net, from, to, o.edge_length);
        }
      }
      break;
    }
  }
  if (o.all_sites) {
    for (NodeId v = 0; v < net.node_count(); ++v) net.set_site(v);
  }

  std::mt19937_64 rng(o.seed);
  const std::size_t n = net.node_count();
  for (std::size_t j = 0; j < o.trajectories; ++j) {
    std::vector<NodeId> walk;
    NodeId cur = static_cast<NodeId>(draw(rng, n));
    walk.push_back(cur);
    std::vector<NodeId> options;
    while (walk.size() < o.walk_length) {
      options.clear();
      const NodeId back = walk.size() >= 2 ? walk[walk.size() - 2] : cur;
      for (const Edge& e : net.out_edges(cur)) {
        if (walk.size() < 2 || e.target != back) options.push_back(e.target);
      }
      if (options.empty()) {
        for (const Edge& e : net.out_edges(cur)) options.push_back(e.target);
      }
      if (options.empty()) break;
      cur = options[draw(rng, options.size())];
      walk.push_back(cur);
    }
    out.trajectories.add(make_trajectory(static_cast<TrajectoryId>(j), walk));
  }
  return out;
}

}  // namespace netclus
