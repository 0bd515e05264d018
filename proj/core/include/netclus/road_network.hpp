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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netclus/types.hpp"

namespace netclus {

struct Edge {
  NodeId target;
  Meters weight;
};

enum class Direction { kForward, kReverse };

// Result of a bounded single-source search. Entries are kept in settle order,
// i.e. ascending distance with ties by node id.
class DistanceMap {
 public:
  DistanceMap() = default;

  // Distance to `node`, or kUnreachable when it was not settled within bound.
  Meters at(NodeId node) const;
  bool contains(NodeId node) const { return index_.contains(node); }
  std::size_t size() const { return settled_.size(); }
  const std::vector<std::pair<NodeId, Meters>>& entries() const { return settled_; }

  void settle(NodeId node, Meters d);

 private:
  std::vector<std::pair<NodeId, Meters>> settled_;
  std::unordered_map<NodeId, Meters> index_;
};

// Directed road graph on dense node ids 0..N-1 with a set of candidate sites.
// Immutable after construction except for appended nodes (site insertion of
// nodes that were not part of the loaded network).
class RoadNetwork {
 public:
  RoadNetwork() = default;
  explicit RoadNetwork(std::size_t node_count);

  // Adds u->v. A parallel edge keeps the minimum weight. Throws
  // ValidationError for non-positive or non-finite weights and unknown ids.
  void add_edge(NodeId u, NodeId v, Meters weight);
  // Appends a fresh node and returns its id.
  NodeId add_node();

  void set_site(NodeId node, bool is_site = true);
  bool is_site(NodeId node) const { return site_flags_.at(node) != 0; }
  // Sorted ascending.
  std::vector<NodeId> sites() const;

  std::size_t node_count() const { return forward_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t site_count() const { return site_count_; }
  bool has_node(NodeId node) const { return node < forward_.size(); }

  std::span<const Edge> out_edges(NodeId node) const { return forward_.at(node); }
  std::span<const Edge> in_edges(NodeId node) const { return reverse_.at(node); }
  std::span<const Edge> edges(NodeId node, Direction dir) const {
    return dir == Direction::kForward ? out_edges(node) : in_edges(node);
  }

  Meters min_edge_weight() const;

 private:
  std::vector<std::vector<Edge>> forward_;
  std::vector<std::vector<Edge>> reverse_;
  std::vector<char> site_flags_;
  std::size_t edge_count_ = 0;
  std::size_t site_count_ = 0;
};

RoadNetwork load_network(const std::filesystem::path& network_file,
                         const std::filesystem::path& sites_file);
RoadNetwork parse_network(std::istream& network, std::istream& sites,
                          const std::string& network_name = "network",
                          const std::string& sites_name = "sites");
void write_network(std::ostream& out, const RoadNetwork& net);
void write_sites(std::ostream& out, const RoadNetwork& net);

// Dijkstra from `source`. With Direction::kReverse the result holds d(v, source).
// Nodes farther than `bound` are absent. When `stop_after` is non-empty the
// search ends once every listed node is settled.
DistanceMap shortest_paths_from(const RoadNetwork& net, NodeId source, Direction dir,
                                Meters bound = kUnreachable,
                                std::span<const NodeId> stop_after = {});

// Point-to-point shortest distance d(u, v); stops as soon as v is settled.
Meters shortest_distance(const RoadNetwork& net, NodeId u, NodeId v);

// d(u,v) + d(v,u).
Meters round_trip(const RoadNetwork& net, NodeId u, NodeId v);

// Every u with round_trip(v, u) <= radius, paired with that round trip,
// ascending by distance then id. Always contains (v, 0).
std::vector<std::pair<NodeId, Meters>> reachable_within(const RoadNetwork& net, NodeId v,
                                                        Meters radius);

}  // namespace netclus
