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

#include "netclus/road_network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "netclus/errors.hpp"
#include "text_io.hpp"

namespace netclus {

Meters DistanceMap::at(NodeId node) const {
  auto it = index_.find(node);
  return it == index_.end() ? kUnreachable : it->second;
}

void DistanceMap::settle(NodeId node, Meters d) {
  settled_.emplace_back(node, d);
  index_.emplace(node, d);
}

RoadNetwork::RoadNetwork(std::size_t node_count)
    : forward_(node_count), reverse_(node_count), site_flags_(node_count, 0) {}

void RoadNetwork::add_edge(NodeId u, NodeId v, Meters weight) {
  if (!has_node(u) || !has_node(v)) {
    throw ValidationError("edge " + std::to_string(u) + "->" + std::to_string(v) +
                          " references an undeclared node");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ValidationError("edge " + std::to_string(u) + "->" + std::to_string(v) +
                          " has non-positive weight");
  }
  auto& out = forward_[u];
  auto it = std::find_if(out.begin(), out.end(), [v](const Edge& e) { return e.target == v; });
  if (it != out.end()) {
    if (weight < it->weight) {
      it->weight = weight;
      auto& in = reverse_[v];
      auto rit = std::find_if(in.begin(), in.end(), [u](const Edge& e) { return e.target == u; });
      rit->weight = weight;
    }
    return;
  }
  out.push_back({v, weight});
  reverse_[v].push_back({u, weight});
  ++edge_count_;
}

NodeId RoadNetwork::add_node() {
  forward_.emplace_back();
  reverse_.emplace_back();
  site_flags_.push_back(0);
  return static_cast<NodeId>(forward_.size() - 1);
}

void RoadNetwork::set_site(NodeId node, bool is_site) {
  if (!has_node(node)) {
    throw ValidationError("site id " + std::to_string(node) + " is not a declared node");
  }
  char flag = is_site ? 1 : 0;
  if (site_flags_[node] == flag) return;
  site_flags_[node] = flag;
  if (is_site) {
    ++site_count_;
  } else {
    --site_count_;
  }
}

std::vector<NodeId> RoadNetwork::sites() const {
  std::vector<NodeId> out;
  out.reserve(site_count_);
  for (NodeId v = 0; v < site_flags_.size(); ++v) {
    if (site_flags_[v]) out.push_back(v);
  }
  return out;
}

Meters RoadNetwork::min_edge_weight() const {
  Meters best = kUnreachable;
  for (const auto& out : forward_) {
    for (const Edge& e : out) best = std::min(best, e.weight);
  }
  return best;
}

RoadNetwork parse_network(std::istream& network, std::istream& sites,
                          const std::string& network_name, const std::string& sites_name) {
  detail::LineReader reader(network, network_name);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(network_name, reader.line(), "missing header `N M`");
  if (tok.size() != 2) throw ParseError(network_name, reader.line(), "header must be `N M`");
  const auto n = detail::parse_uint(tok[0], reader);
  const auto m = detail::parse_uint(tok[1], reader);

  RoadNetwork net(n);
  std::vector<char> declared(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(tok)) throw ParseError(network_name, reader.line(), "expected node line");
    if (tok.size() != 1 && tok.size() != 3) {
      throw ParseError(network_name, reader.line(), "node line must be `id` or `id lat lon`");
    }
    const auto id = detail::parse_uint(tok[0], reader);
    if (tok.size() == 3) {
      detail::parse_double(tok[1], reader);
      detail::parse_double(tok[2], reader);
    }
    if (id >= n) {
      throw ValidationError(network_name + ":" + std::to_string(reader.line()) + ": node id " +
                            std::to_string(id) + " outside 0.." + std::to_string(n - 1));
    }
    if (declared[id]) {
      throw ValidationError(network_name + ":" + std::to_string(reader.line()) +
                            ": duplicate node id " + std::to_string(id));
    }
    declared[id] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(tok)) throw ParseError(network_name, reader.line(), "expected edge line");
    if (tok.size() != 3) throw ParseError(network_name, reader.line(), "edge line must be `u v w`");
    const auto u = detail::parse_uint(tok[0], reader);
    const auto v = detail::parse_uint(tok[1], reader);
    const double w = detail::parse_double(tok[2], reader);
    try {
      net.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), w);
    } catch (const ValidationError& e) {
      throw ValidationError(network_name + ":" + std::to_string(reader.line()) + ": " + e.what());
    }
  }
  if (reader.next(tok)) throw ParseError(network_name, reader.line(), "trailing content");

  detail::LineReader site_reader(sites, sites_name);
  while (site_reader.next(tok)) {
    if (tok.size() != 1) throw ParseError(sites_name, site_reader.line(), "expected one site id");
    const auto id = detail::parse_uint(tok[0], site_reader);
    if (id >= n) {
      throw ValidationError(sites_name + ":" + std::to_string(site_reader.line()) +
                            ": unknown site id " + std::to_string(id));
    }
    net.set_site(static_cast<NodeId>(id));
  }
  return net;
}

RoadNetwork load_network(const std::filesystem::path& network_file,
                         const std::filesystem::path& sites_file) {
  auto net_in = detail::open_input(network_file);
  auto site_in = detail::open_input(sites_file);
  return parse_network(net_in, site_in, network_file.string(), sites_file.string());
}

void write_network(std::ostream& out, const RoadNetwork& net) {
  out << net.node_count() << ' ' << net.edge_count() << '\n';
  for (NodeId v = 0; v < net.node_count(); ++v) out << v << '\n';
  for (NodeId u = 0; u < net.node_count(); ++u) {
    for (const Edge& e : net.out_edges(u)) {
      out << u << ' ' << e.target << ' ' << detail::format_double(e.weight) << '\n';
    }
  }
}

void write_sites(std::ostream& out, const RoadNetwork& net) {
  for (NodeId s : net.sites()) out << s << '\n';
}

namespace {

struct QueueEntry {
  Meters dist;
  NodeId node;
  bool operator>(const QueueEntry& o) const {
    return dist != o.dist ? dist > o.dist : node > o.node;
  }
};

using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

}  // namespace

DistanceMap shortest_paths_from(const RoadNetwork& net, NodeId source, Direction dir, Meters bound,
                                std::span<const NodeId> stop_after) {
  DistanceMap result;
  if (!net.has_node(source)) return result;
  std::unordered_map<NodeId, char> pending;
  for (NodeId t : stop_after) pending.emplace(t, 1);
  const bool targeted = !pending.empty();
  std::unordered_map<NodeId, Meters> tentative;
  MinQueue queue;
  tentative[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (result.contains(u)) continue;
    if (d > bound) break;
    result.settle(u, d);
    if (targeted && pending.erase(u) && pending.empty()) break;
    for (const Edge& e : net.edges(u, dir)) {
      const Meters nd = d + e.weight;
      if (nd > bound || result.contains(e.target)) continue;
      auto [it, inserted] = tentative.try_emplace(e.target, nd);
      if (inserted || nd < it->second) {
        it->second = nd;
        queue.push({nd, e.target});
      }
    }
  }
  return result;
}

Meters shortest_distance(const RoadNetwork& net, NodeId u, NodeId v) {
  if (u == v) return 0.0;
  std::unordered_map<NodeId, Meters> best;
  MinQueue queue;
  best[u] = 0.0;
  queue.push({0.0, u});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > best[x]) continue;
    if (x == v) return d;
    for (const Edge& e : net.out_edges(x)) {
      const Meters nd = d + e.weight;
      auto [it, inserted] = best.try_emplace(e.target, nd);
      if (inserted || nd < it->second) {
        it->second = nd;
        queue.push({nd, e.target});
      }
    }
  }
  return kUnreachable;
}

Meters round_trip(const RoadNetwork& net, NodeId u, NodeId v) {
  const Meters there = shortest_distance(net, u, v);
  if (there == kUnreachable) return kUnreachable;
  return there + shortest_distance(net, v, u);
}

std::vector<std::pair<NodeId, Meters>> reachable_within(const RoadNetwork& net, NodeId v,
                                                        Meters radius) {
  // Each leg of a qualifying round trip is itself bounded by the radius.
  const DistanceMap out = shortest_paths_from(net, v, Direction::kForward, radius);
  const DistanceMap in = shortest_paths_from(net, v, Direction::kReverse, radius);
  std::vector<std::pair<NodeId, Meters>> result;
  for (const auto& [u, d_out] : out.entries()) {
    const Meters d_in = in.at(u);
    if (d_in == kUnreachable) continue;
    const Meters rt = d_out + d_in;
    if (rt <= radius) result.emplace_back(u, rt);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return result;
}

}  // namespace netclus
