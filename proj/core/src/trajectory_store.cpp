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

#include "netclus/trajectory_store.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include "netclus/errors.hpp"
#include "netclus/parallel.hpp"
#include "text_io.hpp"

namespace netclus {

Trajectory make_trajectory(TrajectoryId id, std::span<const NodeId> nodes) {
  if (nodes.empty()) {
    throw ValidationError("trajectory " + std::to_string(id) + " has no nodes");
  }
  Trajectory t{id, {}};
  t.nodes.reserve(nodes.size());
  for (NodeId v : nodes) {
    if (t.nodes.empty() || t.nodes.back() != v) t.nodes.push_back(v);
  }
  return t;
}

void TrajectoryStore::add(Trajectory t) {
  if (t.nodes.empty()) {
    throw ValidationError("trajectory " + std::to_string(t.id) + " has no nodes");
  }
  if (by_id_.contains(t.id)) {
    throw ValidationError("duplicate trajectory id " + std::to_string(t.id));
  }
  by_id_.emplace(t.id, trajectories_.size());
  trajectories_.push_back(std::move(t));
}

bool TrajectoryStore::remove(TrajectoryId id) {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return false;
  trajectories_.erase(trajectories_.begin() + static_cast<std::ptrdiff_t>(it->second));
  by_id_.clear();
  for (std::size_t i = 0; i < trajectories_.size(); ++i) by_id_.emplace(trajectories_[i].id, i);
  return true;
}

const Trajectory* TrajectoryStore::find(TrajectoryId id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &trajectories_[it->second];
}

std::optional<std::size_t> TrajectoryStore::index_of(TrajectoryId id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

namespace {

Trajectory parse_record(const std::vector<std::string>& tok, const detail::LineReader& at,
                        const RoadNetwork& net) {
  if (tok.size() < 2) throw ParseError(at.name(), at.line(), "expected `traj_id l v1 ... vl`");
  const TrajectoryId id = detail::parse_int(tok[0], at);
  const auto len = detail::parse_uint(tok[1], at);
  if (len == 0) {
    throw ValidationError(at.name() + ":" + std::to_string(at.line()) + ": trajectory " +
                          std::to_string(id) + " is empty");
  }
  if (tok.size() != len + 2) {
    throw ParseError(at.name(), at.line(),
                     "declared length " + std::to_string(len) + " but found " +
                         std::to_string(tok.size() - 2) + " nodes");
  }
  std::vector<NodeId> nodes;
  nodes.reserve(len);
  for (std::size_t i = 2; i < tok.size(); ++i) {
    const auto v = detail::parse_uint(tok[i], at);
    if (v >= net.node_count()) {
      throw ValidationError(at.name() + ":" + std::to_string(at.line()) + ": unknown node id " +
                            std::to_string(v));
    }
    nodes.push_back(static_cast<NodeId>(v));
  }
  return make_trajectory(id, nodes);
}

}  // namespace

TrajectoryStore parse_trajectories(std::istream& in, const RoadNetwork& net,
                                   const std::string& name) {
  detail::LineReader reader(in, name);
  std::vector<std::string> tok;
  TrajectoryStore store;
  while (reader.next(tok)) {
    Trajectory t = parse_record(tok, reader, net);
    try {
      store.add(std::move(t));
    } catch (const ValidationError& e) {
      throw ValidationError(name + ":" + std::to_string(reader.line()) + ": " + e.what());
    }
  }
  return store;
}

Trajectory parse_trajectory_line(const std::string& line, const RoadNetwork& net) {
  std::istringstream in(line);
  detail::LineReader reader(in, "trajectory");
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError("trajectory", 1, "empty trajectory record");
  return parse_record(tok, reader, net);
}

TrajectoryStore load_trajectories(const std::filesystem::path& file, const RoadNetwork& net) {
  auto in = detail::open_input(file);
  return parse_trajectories(in, net, file.string());
}

void write_trajectories(std::ostream& out, const TrajectoryStore& store) {
  for (const Trajectory& t : store) {
    out << t.id << ' ' << t.nodes.size();
    for (NodeId v : t.nodes) out << ' ' << v;
    out << '\n';
  }
}

LegDistances::LegDistances(const RoadNetwork& net, const Trajectory& t)
    : length_(t.nodes.size()), d_(length_ * length_, kUnreachable) {
  std::unordered_map<NodeId, DistanceMap> memo;
  for (std::size_t k = 0; k < length_; ++k) {
    auto it = memo.find(t.nodes[k]);
    if (it == memo.end()) {
      std::span<const NodeId> rest(t.nodes.data() + k, length_ - k);
      it = memo.emplace(t.nodes[k], shortest_paths_from(net, t.nodes[k], Direction::kForward,
                                                        kUnreachable, rest))
               .first;
    }
    for (std::size_t l = k; l < length_; ++l) d_[k * length_ + l] = it->second.at(t.nodes[l]);
  }
}

namespace {

// min over k <= l of to_site[k] + from_site[l] - legs(k, l), clamped at 0.
template <typename ToSite, typename FromSite>
Meters min_detour(std::size_t len, const LegDistances& legs, ToSite to_site, FromSite from_site) {
  Meters best = kUnreachable;
  std::vector<Meters> back(len);
  for (std::size_t l = 0; l < len; ++l) back[l] = from_site(l);
  for (std::size_t k = 0; k < len; ++k) {
    const Meters a = to_site(k);
    if (a == kUnreachable) continue;
    for (std::size_t l = k; l < len; ++l) {
      const Meters b = back[l];
      if (b == kUnreachable) continue;
      const Meters leg = legs.at(k, l);
      if (leg == kUnreachable) continue;  // cannot happen when a and b are finite
      const Meters raw = a + b - leg;
      if (raw < best) best = raw;
    }
  }
  if (best == kUnreachable) return best;
  return best < 0.0 ? 0.0 : best;
}

}  // namespace

Meters detour_distance(const Trajectory& t, const LegDistances& legs, const DistanceMap& from_site,
                       const DistanceMap& to_site) {
  return min_detour(
      t.nodes.size(), legs, [&](std::size_t k) { return to_site.at(t.nodes[k]); },
      [&](std::size_t l) { return from_site.at(t.nodes[l]); });
}

Meters detour_distance(const RoadNetwork& net, const Trajectory& t, NodeId site) {
  LegDistances legs(net, t);
  return detour_distance(t, legs, shortest_paths_from(net, site, Direction::kForward),
                         shortest_paths_from(net, site, Direction::kReverse));
}

TrajectoryProbe::TrajectoryProbe(const RoadNetwork& net, const Trajectory& t)
    : slot_(t.nodes.size()) {
  std::unordered_map<NodeId, std::size_t> slots;
  for (std::size_t k = 0; k < t.nodes.size(); ++k) {
    auto [it, inserted] = slots.try_emplace(t.nodes[k], from_node_.size());
    if (inserted) {
      from_node_.push_back(shortest_paths_from(net, t.nodes[k], Direction::kForward));
      to_node_.push_back(shortest_paths_from(net, t.nodes[k], Direction::kReverse));
    }
    slot_[k] = it->second;
  }
  legs_ = LegDistances(net, t);
}

Meters TrajectoryProbe::detour_to(NodeId target) const {
  return min_detour(
      slot_.size(), legs_, [&](std::size_t k) { return from_node_[slot_[k]].at(target); },
      [&](std::size_t l) { return to_node_[slot_[l]].at(target); });
}

SiteTrajectoryDistances precompute_site_trajectory_distances(const RoadNetwork& net,
                                                             const TrajectoryStore& store,
                                                             Meters cutoff) {
  const auto start = std::chrono::steady_clock::now();
  SiteTrajectoryDistances out;
  out.cutoff = cutoff;
  out.sites = net.sites();
  out.trajectories.reserve(store.size());
  for (const Trajectory& t : store) out.trajectories.push_back(t.id);

  std::vector<LegDistances> legs(store.size());
  parallel_for(store.size(), [&](std::size_t j) { legs[j] = LegDistances(net, store[j]); });

  out.by_site.resize(out.sites.size());
  parallel_for(out.sites.size(), [&](std::size_t i) {
    const NodeId s = out.sites[i];
    const DistanceMap from_site = shortest_paths_from(net, s, Direction::kForward);
    const DistanceMap to_site = shortest_paths_from(net, s, Direction::kReverse);
    auto& row = out.by_site[i];
    for (std::size_t j = 0; j < store.size(); ++j) {
      const Meters d = detour_distance(store[j], legs[j], from_site, to_site);
      if (d <= cutoff) row.push_back({static_cast<std::uint32_t>(j), d});
    }
  });

  auto by_distance = [](const DistanceEntry& a, const DistanceEntry& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  };
  out.by_trajectory.resize(store.size());
  for (std::size_t i = 0; i < out.by_site.size(); ++i) {
    std::sort(out.by_site[i].begin(), out.by_site[i].end(), by_distance);
    for (const DistanceEntry& e : out.by_site[i]) {
      out.by_trajectory[e.index].push_back({static_cast<std::uint32_t>(i), e.distance});
    }
    out.stats.pairs += out.by_site[i].size();
  }
  for (auto& col : out.by_trajectory) std::sort(col.begin(), col.end(), by_distance);
  out.stats.bytes = 2 * out.stats.pairs * sizeof(DistanceEntry);
  out.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

namespace {
constexpr const char* kDistancesMagic = "NETCLUS-DISTANCES";
}

void write_distances(std::ostream& out, const SiteTrajectoryDistances& dist) {
  out << kDistancesMagic << ' ' << kDistancesFormatVersion << '\n';
  out << "cutoff " << detail::format_double(dist.cutoff) << '\n';
  out << "sites " << dist.sites.size() << '\n';
  for (NodeId s : dist.sites) out << s << '\n';
  out << "trajectories " << dist.trajectories.size() << '\n';
  for (TrajectoryId t : dist.trajectories) out << t << '\n';
  std::size_t pairs = 0;
  for (const auto& row : dist.by_site) pairs += row.size();
  out << "pairs " << pairs << '\n';
  for (std::size_t i = 0; i < dist.by_site.size(); ++i) {
    for (const DistanceEntry& e : dist.by_site[i]) {
      out << i << ' ' << e.index << ' ' << detail::format_double(e.distance) << '\n';
    }
  }
}

SiteTrajectoryDistances read_distances(std::istream& in, const std::string& name) {
  detail::LineReader reader(in, name);
  std::vector<std::string> tok;
  auto expect = [&](const char* key, std::size_t arity) {
    if (!reader.next(tok) || tok.size() != arity || tok[0] != key) {
      throw ParseError(name, reader.line(), std::string("expected `") + key + "`");
    }
  };
  if (!reader.next(tok) || tok.size() != 2 || tok[0] != kDistancesMagic) {
    throw ValidationError(name + ": not a distances artifact");
  }
  if (tok[1] != std::to_string(kDistancesFormatVersion)) {
    throw ValidationError(name + ": unsupported distances format version " + tok[1] +
                          " (expected " + std::to_string(kDistancesFormatVersion) + ")");
  }
  SiteTrajectoryDistances dist;
  expect("cutoff", 2);
  dist.cutoff = detail::parse_double(tok[1], reader);
  expect("sites", 2);
  const auto n = detail::parse_uint(tok[1], reader);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(tok) || tok.size() != 1)
      throw ParseError(name, reader.line(), "expected site id");
    dist.sites.push_back(static_cast<NodeId>(detail::parse_uint(tok[0], reader)));
  }
  expect("trajectories", 2);
  const auto m = detail::parse_uint(tok[1], reader);
  for (std::size_t j = 0; j < m; ++j) {
    if (!reader.next(tok) || tok.size() != 1) {
      throw ParseError(name, reader.line(), "expected trajectory id");
    }
    dist.trajectories.push_back(detail::parse_int(tok[0], reader));
  }
  expect("pairs", 2);
  const auto pairs = detail::parse_uint(tok[1], reader);
  dist.by_site.resize(n);
  dist.by_trajectory.resize(m);
  for (std::size_t p = 0; p < pairs; ++p) {
    if (!reader.next(tok) || tok.size() != 3)
      throw ParseError(name, reader.line(), "expected `site traj d`");
    const auto i = detail::parse_uint(tok[0], reader);
    const auto j = detail::parse_uint(tok[1], reader);
    const Meters d = detail::parse_double(tok[2], reader);
    if (i >= n || j >= m) throw ParseError(name, reader.line(), "index out of range");
    dist.by_site[i].push_back({static_cast<std::uint32_t>(j), d});
    dist.by_trajectory[j].push_back({static_cast<std::uint32_t>(i), d});
  }
  auto by_distance = [](const DistanceEntry& a, const DistanceEntry& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  };
  for (auto& col : dist.by_trajectory) std::sort(col.begin(), col.end(), by_distance);
  dist.stats.pairs = pairs;
  dist.stats.bytes = 2 * pairs * sizeof(DistanceEntry);
  return dist;
}

}  // namespace netclus
