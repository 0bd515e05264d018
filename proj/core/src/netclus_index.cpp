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

#include "netclus/netclus_index.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "netclus/errors.hpp"
#include "netclus/parallel.hpp"
#include "text_io.hpp"

namespace netclus {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Clusters of one instance visited by `t`, in order, consecutive repeats
// collapsed.
std::vector<ClusterId> cluster_sequence(const IndexInstance& inst, const Trajectory& t) {
  std::vector<ClusterId> seq;
  for (NodeId v : t.nodes) {
    const ClusterId c = inst.cluster_of[v];
    if (seq.empty() || seq.back() != c) seq.push_back(c);
  }
  return seq;
}

std::vector<ClusterId> distinct(std::vector<ClusterId> seq) {
  std::sort(seq.begin(), seq.end());
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  return seq;
}

bool neighbor_less(const Neighbor& a, const Neighbor& b) {
  return a.round_trip != b.round_trip ? a.round_trip < b.round_trip : a.cluster < b.cluster;
}

void insert_trajectory_entry(Cluster& g, TrajectoryEntry e) {
  auto it = std::lower_bound(g.trajectories.begin(), g.trajectories.end(), e.id,
                             [](const TrajectoryEntry& x, TrajectoryId id) { return x.id < id; });
  g.trajectories.insert(it, e);
}

bool erase_trajectory_entry(Cluster& g, TrajectoryId id) {
  auto it = std::lower_bound(g.trajectories.begin(), g.trajectories.end(), id,
                             [](const TrajectoryEntry& x, TrajectoryId v) { return x.id < v; });
  if (it == g.trajectories.end() || it->id != id) return false;
  g.trajectories.erase(it);
  return true;
}

const ClusterMember* find_member(const Cluster& g, NodeId v) {
  auto it = std::lower_bound(g.members.begin(), g.members.end(), v,
                             [](const ClusterMember& m, NodeId x) { return m.node < x; });
  return it != g.members.end() && it->node == v ? &*it : nullptr;
}

// Neighbor lists of every cluster: other centers within `reach` round trip.
void link_neighbors(const RoadNetwork& net, IndexInstance& inst, Meters reach) {
  std::unordered_map<NodeId, ClusterId> center_of;
  for (const Cluster& g : inst.clusters) center_of.emplace(g.center, g.id);
  parallel_for(inst.clusters.size(), [&](std::size_t i) {
    Cluster& g = inst.clusters[i];
    g.neighbors.clear();
    for (const auto& [u, rt] : reachable_within(net, g.center, reach)) {
      auto it = center_of.find(u);
      if (it != center_of.end() && it->second != g.id) g.neighbors.push_back({it->second, rt});
    }
    std::sort(g.neighbors.begin(), g.neighbors.end(), neighbor_less);
  });
}

Meters neighbor_reach(const IndexInstance& inst, double gamma) {
  return 4.0 * inst.radius * (1.0 + gamma);
}

}  // namespace

UpdateReport& UpdateReport::operator+=(const UpdateReport& other) {
  clusters_created += other.clusters_created;
  representatives_changed += other.representatives_changed;
  trajectory_entries += other.trajectory_entries;
  return *this;
}

std::size_t IndexInstance::max_neighbor_list() const {
  std::size_t best = 0;
  for (const Cluster& g : clusters) best = std::max(best, g.neighbors.size());
  return best;
}

std::size_t IndexInstance::max_trajectory_list() const {
  std::size_t best = 0;
  for (const Cluster& g : clusters) best = std::max(best, g.trajectories.size());
  return best;
}

void IndexInstance::refresh_stats() {
  stats.clusters = clusters.size();
  std::size_t tl = 0, cl = 0;
  stats.max_trajectories = 0;
  stats.max_nodes = 0;
  for (const Cluster& g : clusters) {
    tl += g.trajectories.size();
    cl += g.neighbors.size();
    stats.max_trajectories = std::max(stats.max_trajectories, g.trajectories.size());
    stats.max_nodes = std::max(stats.max_nodes, g.members.size());
  }
  const double n = clusters.empty() ? 1.0 : static_cast<double>(clusters.size());
  stats.mean_trajectory_list = static_cast<double>(tl) / n;
  stats.mean_neighbor_list = static_cast<double>(cl) / n;
}

GdspResult greedy_gdsp(const RoadNetwork& net, Meters radius, const GdspOptions& options) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ArgumentError("clustering radius must be positive and finite");
  }
  const std::size_t n = net.node_count();
  std::vector<std::vector<std::pair<NodeId, Meters>>> ball(n);
  parallel_for(n, [&](std::size_t v) {
    ball[v] = reachable_within(net, static_cast<NodeId>(v), 2.0 * radius);
  });

  GdspResult result;
  std::size_t total = 0;
  for (const auto& b : ball) total += b.size();
  result.mean_dominating_set = n ? static_cast<double>(total) / static_cast<double>(n) : 0.0;

  std::vector<char> clustered(n, 0);
  const bool fm = options.counting == Counting::kFm;
  std::vector<FmSketch> sketches;
  FmSketch covered(options.fm_registers, options.fm_seed);
  if (fm) {
    sketches.assign(n, FmSketch(options.fm_registers, options.fm_seed));
    parallel_for(n, [&](std::size_t v) {
      for (const auto& [u, rt] : ball[v]) sketches[v].insert(u);
    });
  }
  const auto gain = [&](NodeId v) -> double {
    if (fm) return covered.estimate_union(sketches[v]) - covered.estimate();
    std::size_t count = 0;
    for (const auto& [u, rt] : ball[v]) count += clustered[u] ? 0 : 1;
    return static_cast<double>(count);
  };

  // Max-heap on (gain, -id). Gains only shrink as nodes get clustered, so a
  // popped entry whose refreshed gain still leads the heap is the true best.
  using Entry = std::pair<double, NodeId>;
  const auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (NodeId v = 0; v < n; ++v) heap.push({gain(v), v});

  while (!heap.empty()) {
    const auto [stale, v] = heap.top();
    heap.pop();
    if (clustered[v]) continue;
    const double fresh = gain(v);
    if (fresh != stale && !heap.empty() && worse({fresh, v}, heap.top())) {
      heap.push({fresh, v});
      continue;
    }
    Cluster g;
    g.id = static_cast<ClusterId>(result.clusters.size());
    g.center = v;
    for (const auto& [u, rt] : ball[v]) {
      if (clustered[u]) continue;
      clustered[u] = 1;
      g.members.push_back({u, rt});
    }
    std::sort(g.members.begin(), g.members.end(),
              [](const ClusterMember& a, const ClusterMember& b) { return a.node < b.node; });
    if (fm) covered.merge(sketches[v]);
    result.clusters.push_back(std::move(g));
  }
  return result;
}

std::optional<NodeId> choose_representative(const Cluster& cluster, const RoadNetwork& net) {
  const ClusterMember* best = nullptr;
  for (const ClusterMember& m : cluster.members) {
    if (!net.has_node(m.node) || !net.is_site(m.node)) continue;
    if (!best || m.round_trip < best->round_trip ||
        (m.round_trip == best->round_trip && m.node < best->node)) {
      best = &m;
    }
  }
  if (!best) return std::nullopt;
  return best->node;
}

std::size_t instance_count_for(double gamma, Meters tau_min, Meters tau_max) {
  const double ratio = tau_max / tau_min;
  std::size_t t = 1;
  double power = 1.0 + gamma;
  while (power <= ratio * (1.0 + 1e-12)) {
    ++t;
    power *= 1.0 + gamma;
  }
  return t;
}

TauRange default_tau_range(const RoadNetwork& net, const BuildOptions& options) {
  const std::vector<NodeId> sites = net.sites();
  Meters lo = kUnreachable;
  Meters hi = 0.0;
  const auto sweep = [&](NodeId s) {
    const DistanceMap out = shortest_paths_from(net, s, Direction::kForward);
    const DistanceMap in = shortest_paths_from(net, s, Direction::kReverse);
    Meters local_lo = kUnreachable, local_hi = 0.0;
    for (NodeId u : sites) {
      if (u == s) continue;
      const Meters rt = out.at(u) + in.at(u);
      if (!std::isfinite(rt) || rt <= 0.0) continue;
      local_lo = std::min(local_lo, rt);
      local_hi = std::max(local_hi, rt);
    }
    return std::pair{local_lo, local_hi};
  };

  const bool exact = sites.size() <= options.exact_range_limit;
  std::vector<NodeId> sources;
  if (exact) {
    sources = sites;
  } else {
    std::mt19937_64 rng(options.range_seed);
    std::sample(sites.begin(), sites.end(), std::back_inserter(sources), options.range_samples,
                rng);
    // Adjacent site pairs give the smallest round trips in practice.
    for (NodeId s : sites) {
      for (const Edge& e : net.out_edges(s)) {
        if (e.target == s || !net.is_site(e.target)) continue;
        const Meters rt = round_trip(net, s, e.target);
        if (std::isfinite(rt) && rt > 0.0) lo = std::min(lo, rt);
      }
    }
  }
  std::vector<std::pair<Meters, Meters>> part(sources.size());
  parallel_for(sources.size(), [&](std::size_t i) { part[i] = sweep(sources[i]); });
  for (const auto& [a, b] : part) {
    if (exact) lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  if (!std::isfinite(lo) || hi <= 0.0) {
    // Fewer than two mutually reachable sites: a single instance remains.
    const Meters w = net.edge_count() ? net.min_edge_weight() : 1.0;
    return {2.0 * w, 2.0 * w, exact};
  }
  return {lo, std::max(lo, hi), exact};
}

NetClusIndex NetClusIndex::from_parts(double gamma, Meters tau_min, Meters tau_max, RoadNetwork net,
                                      TrajectoryStore store, std::vector<IndexInstance> instances) {
  NetClusIndex idx;
  idx.gamma_ = gamma;
  idx.tau_min_ = tau_min;
  idx.tau_max_ = tau_max;
  idx.net_ = std::move(net);
  idx.store_ = std::move(store);
  idx.instances_ = std::move(instances);
  return idx;
}

NetClusIndex build_index(RoadNetwork net, TrajectoryStore store, const BuildOptions& options) {
  if (!(options.gamma > 0.0 && options.gamma <= 1.0)) {
    throw ConfigError("gamma must lie in (0, 1]");
  }
  if (options.tau_min && !(*options.tau_min > 0.0)) throw ConfigError("tau_min must be positive");
  if (options.tau_min && options.tau_max && !(*options.tau_min < *options.tau_max)) {
    throw ConfigError("tau_min must be smaller than tau_max");
  }
  Meters tau_min = 0.0, tau_max = 0.0;
  if (options.tau_min && options.tau_max) {
    tau_min = *options.tau_min;
    tau_max = *options.tau_max;
  } else {
    const TauRange range = default_tau_range(net, options);
    tau_min = options.tau_min.value_or(range.tau_min);
    tau_max = options.tau_max.value_or(range.tau_max);
    if (tau_max < tau_min) {
      throw ConfigError("tau_min " + detail::format_double(tau_min) + " exceeds tau_max " +
                        detail::format_double(tau_max));
    }
  }

  NetClusIndex idx;
  idx.gamma_ = options.gamma;
  idx.tau_min_ = tau_min;
  idx.tau_max_ = tau_max;
  idx.gdsp_ = options.gdsp;
  idx.net_ = std::move(net);
  idx.store_ = std::move(store);
  const RoadNetwork& g = idx.net_;

  const std::size_t t = instance_count_for(options.gamma, tau_min, tau_max);
  idx.instances_.resize(t);
  for (std::size_t p = 0; p < t; ++p) {
    const auto start = Clock::now();
    IndexInstance& inst = idx.instances_[p];
    inst.p = static_cast<int>(p);
    inst.radius = tau_min / 4.0 * std::pow(1.0 + options.gamma, static_cast<double>(p));
    GdspResult gdsp = greedy_gdsp(g, inst.radius, options.gdsp);
    inst.clusters = std::move(gdsp.clusters);
    inst.stats.mean_dominating_set = gdsp.mean_dominating_set;
    inst.cluster_of.assign(g.node_count(), 0);
    for (Cluster& c : inst.clusters) {
      for (const ClusterMember& m : c.members) inst.cluster_of[m.node] = c.id;
      idx.refresh_representative(c);
    }
    link_neighbors(g, inst, neighbor_reach(inst, options.gamma));
    inst.stats.build_seconds = seconds_since(start);
  }

  // One probe per trajectory serves every instance.
  const auto start = Clock::now();
  const TrajectoryStore& trajectories = idx.store_;
  std::vector<std::vector<std::vector<std::pair<ClusterId, Meters>>>> rows(trajectories.size());
  parallel_for(trajectories.size(), [&](std::size_t j) {
    const Trajectory& tr = trajectories[j];
    const TrajectoryProbe probe(g, tr);
    rows[j].resize(t);
    for (std::size_t p = 0; p < t; ++p) {
      const IndexInstance& inst = idx.instances_[p];
      for (ClusterId c : distinct(cluster_sequence(inst, tr))) {
        rows[j][p].emplace_back(c, probe.detour_to(inst.clusters[c].center));
      }
    }
  });
  for (std::size_t j = 0; j < trajectories.size(); ++j) {
    const Trajectory& tr = trajectories[j];
    for (std::size_t p = 0; p < t; ++p) {
      IndexInstance& inst = idx.instances_[p];
      inst.sequences[tr.id] = cluster_sequence(inst, tr);
      for (const auto& [c, detour] : rows[j][p])
        inst.clusters[c].trajectories.push_back({tr.id, detour});
    }
  }
  const double trajectory_seconds = seconds_since(start) / static_cast<double>(t);
  for (IndexInstance& inst : idx.instances_) {
    for (Cluster& c : inst.clusters) {
      std::sort(c.trajectories.begin(), c.trajectories.end(),
                [](const TrajectoryEntry& a, const TrajectoryEntry& b) { return a.id < b.id; });
    }
    inst.stats.build_seconds += trajectory_seconds;
    inst.refresh_stats();
  }
  return idx;
}

bool NetClusIndex::refresh_representative(Cluster& cluster) {
  const auto rep = choose_representative(cluster, net_);
  const bool changed = rep != cluster.representative;
  cluster.representative = rep;
  cluster.representative_round_trip = 0.0;
  if (rep) cluster.representative_round_trip = find_member(cluster, *rep)->round_trip;
  return changed;
}

void NetClusIndex::refresh_stats() {
  for (IndexInstance& inst : instances_) inst.refresh_stats();
}

std::size_t NetClusIndex::index_trajectory(const Trajectory& t, const TrajectoryProbe& probe) {
  std::size_t entries = 0;
  for (IndexInstance& inst : instances_) {
    std::vector<ClusterId> seq = cluster_sequence(inst, t);
    for (ClusterId c : distinct(seq)) {
      insert_trajectory_entry(inst.clusters[c], {t.id, probe.detour_to(inst.clusters[c].center)});
      ++entries;
    }
    inst.sequences[t.id] = std::move(seq);
  }
  return entries;
}

UpdateReport NetClusIndex::add_site(NodeId site) {
  if (!net_.has_node(site)) throw ArgumentError("unknown node " + std::to_string(site));
  if (net_.is_site(site))
    throw ArgumentError("node " + std::to_string(site) + " is already a site");
  net_.set_site(site, true);
  UpdateReport report;
  for (IndexInstance& inst : instances_) {
    if (refresh_representative(inst.clusters[inst.cluster_of[site]])) {
      ++report.representatives_changed;
    }
  }
  return report;
}

NodeId NetClusIndex::add_site_node(std::span<const Attachment> edges, UpdateReport* report) {
  if (edges.empty()) throw ArgumentError("a new site node needs at least one attachment edge");
  for (const Attachment& a : edges) {
    if (!net_.has_node(a.neighbor)) {
      throw ArgumentError("unknown attachment node " + std::to_string(a.neighbor));
    }
    if (!(a.to_neighbor > 0.0) || !(a.from_neighbor > 0.0) || !std::isfinite(a.to_neighbor) ||
        !std::isfinite(a.from_neighbor)) {
      throw ArgumentError("attachment weights must be positive and finite");
    }
  }
  const NodeId v = net_.add_node();
  for (const Attachment& a : edges) {
    net_.add_edge(v, a.neighbor, a.to_neighbor);
    net_.add_edge(a.neighbor, v, a.from_neighbor);
  }
  net_.set_site(v, true);

  UpdateReport local;
  for (IndexInstance& inst : instances_) {
    // Round trip to a neighbor's center, estimated through that neighbor.
    std::optional<ClusterId> nearest;
    Meters estimate = kUnreachable;
    for (const Attachment& a : edges) {
      const ClusterId c = inst.cluster_of[a.neighbor];
      const Meters e =
          a.to_neighbor + a.from_neighbor + find_member(inst.clusters[c], a.neighbor)->round_trip;
      if (!nearest || e < estimate || (e == estimate && c < *nearest)) {
        estimate = e;
        nearest = c;
      }
    }
    if (estimate <= 2.0 * inst.radius) {
      Cluster& g = inst.clusters[*nearest];
      g.members.push_back({v, round_trip(net_, v, g.center)});
      inst.cluster_of.push_back(g.id);
      if (refresh_representative(g)) ++local.representatives_changed;
      continue;
    }
    Cluster g;
    g.id = static_cast<ClusterId>(inst.clusters.size());
    g.center = v;
    g.members.push_back({v, 0.0});
    inst.cluster_of.push_back(g.id);
    refresh_representative(g);
    std::unordered_map<NodeId, ClusterId> center_of;
    for (const Cluster& c : inst.clusters) center_of.emplace(c.center, c.id);
    for (const auto& [u, rt] : reachable_within(net_, v, neighbor_reach(inst, gamma_))) {
      auto it = center_of.find(u);
      if (it == center_of.end()) continue;
      g.neighbors.push_back({it->second, rt});
      auto& back = inst.clusters[it->second].neighbors;
      const Neighbor entry{g.id, rt};
      back.insert(std::upper_bound(back.begin(), back.end(), entry, neighbor_less), entry);
    }
    std::sort(g.neighbors.begin(), g.neighbors.end(), neighbor_less);
    inst.clusters.push_back(std::move(g));
    ++local.clusters_created;
    ++local.representatives_changed;
  }
  refresh_stats();
  if (report) *report += local;
  return v;
}

UpdateReport NetClusIndex::remove_site(NodeId site) {
  if (!net_.has_node(site) || !net_.is_site(site)) {
    throw ArgumentError("node " + std::to_string(site) + " is not a site");
  }
  net_.set_site(site, false);
  UpdateReport report;
  for (IndexInstance& inst : instances_) {
    Cluster& g = inst.clusters[inst.cluster_of[site]];
    if (g.representative == site && refresh_representative(g)) ++report.representatives_changed;
  }
  return report;
}

UpdateReport NetClusIndex::add_trajectory(const Trajectory& t) {
  return add_trajectories(std::span<const Trajectory>(&t, 1));
}

UpdateReport NetClusIndex::add_trajectories(std::span<const Trajectory> batch) {
  std::unordered_set<TrajectoryId> seen;
  for (const Trajectory& t : batch) {
    if (t.nodes.empty()) throw ArgumentError("trajectory " + std::to_string(t.id) + " is empty");
    if (store_.find(t.id) || !seen.insert(t.id).second) {
      throw ArgumentError("trajectory " + std::to_string(t.id) + " is already indexed");
    }
    for (NodeId v : t.nodes) {
      if (!net_.has_node(v)) {
        throw ArgumentError("trajectory " + std::to_string(t.id) + " uses unknown node " +
                            std::to_string(v));
      }
    }
  }
  std::vector<std::optional<TrajectoryProbe>> probes(batch.size());
  parallel_for(batch.size(), [&](std::size_t i) { probes[i].emplace(net_, batch[i]); });
  UpdateReport report;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    store_.add(batch[i]);
    report.trajectory_entries += index_trajectory(batch[i], *probes[i]);
  }
  refresh_stats();
  return report;
}

UpdateReport NetClusIndex::remove_trajectory(TrajectoryId id) {
  if (!store_.find(id)) throw ArgumentError("trajectory " + std::to_string(id) + " is not indexed");
  store_.remove(id);
  UpdateReport report;
  for (IndexInstance& inst : instances_) {
    auto it = inst.sequences.find(id);
    if (it == inst.sequences.end()) continue;
    for (ClusterId c : distinct(it->second)) {
      if (erase_trajectory_entry(inst.clusters[c], id)) ++report.trajectory_entries;
    }
    inst.sequences.erase(it);
  }
  refresh_stats();
  return report;
}

// index.txt layout (all distances in shortest round-trip decimal form):
//   NETCLUS-INDEX <version>
//   gamma <g> tau_min <x> tau_max <y>
//   counting <exact|fm> <registers> <seed>
//   instances <t>
//   per instance:
//     instance <p> <radius> <clusters> <mean |Lambda|>
//     per cluster:
//       cluster <id> <center> <rep or -> <rep round trip>
//       members <n> (<node> <rt>)*
//       tl <n> (<trajectory> <detour>)*
//       cl <n> (<cluster> <rt>)*
//     sequences <n>
//       cc <trajectory> <n> <cluster>*
void save_index(const std::filesystem::path& dir, const NetClusIndex& index) {
  std::filesystem::create_directories(dir);
  {
    auto out = detail::open_output(dir / "network.txt");
    write_network(out, index.net_);
  }
  {
    auto out = detail::open_output(dir / "sites.txt");
    write_sites(out, index.net_);
  }
  {
    auto out = detail::open_output(dir / "trajectories.txt");
    write_trajectories(out, index.store_);
  }
  auto out = detail::open_output(dir / "index.txt");
  using detail::format_double;
  out << "NETCLUS-INDEX " << kIndexFormatVersion << '\n';
  out << "gamma " << format_double(index.gamma_) << " tau_min " << format_double(index.tau_min_)
      << " tau_max " << format_double(index.tau_max_) << '\n';
  out << "counting " << (index.gdsp_.counting == Counting::kFm ? "fm" : "exact") << ' '
      << index.gdsp_.fm_registers << ' ' << index.gdsp_.fm_seed << '\n';
  out << "instances " << index.instances_.size() << '\n';
  for (const IndexInstance& inst : index.instances_) {
    out << "instance " << inst.p << ' ' << format_double(inst.radius) << ' ' << inst.clusters.size()
        << ' ' << format_double(inst.stats.mean_dominating_set) << '\n';
    for (const Cluster& g : inst.clusters) {
      out << "cluster " << g.id << ' ' << g.center << ' ';
      if (g.representative) {
        out << *g.representative;
      } else {
        out << '-';
      }
      out << ' ' << format_double(g.representative_round_trip) << '\n';
      out << "members " << g.members.size();
      for (const ClusterMember& m : g.members)
        out << ' ' << m.node << ' ' << format_double(m.round_trip);
      out << "\ntl " << g.trajectories.size();
      for (const TrajectoryEntry& e : g.trajectories)
        out << ' ' << e.id << ' ' << format_double(e.detour);
      out << "\ncl " << g.neighbors.size();
      for (const Neighbor& n : g.neighbors)
        out << ' ' << n.cluster << ' ' << format_double(n.round_trip);
      out << '\n';
    }
    out << "sequences " << inst.sequences.size() << '\n';
    for (const auto& [id, seq] : inst.sequences) {
      out << "cc " << id << ' ' << seq.size();
      for (ClusterId c : seq) out << ' ' << c;
      out << '\n';
    }
  }
  if (!out) throw ValidationError("failed writing " + (dir / "index.txt").string());
}

NetClusIndex load_index(const std::filesystem::path& dir) {
  NetClusIndex idx;
  idx.net_ = load_network(dir / "network.txt", dir / "sites.txt");
  idx.store_ = load_trajectories(dir / "trajectories.txt", idx.net_);

  auto in = detail::open_input(dir / "index.txt");
  detail::LineReader reader(in, (dir / "index.txt").string());
  std::vector<std::string> tok;
  const auto expect = [&](const char* key, std::size_t min_tokens) {
    if (!reader.next(tok))
      throw ParseError(reader.name(), reader.line() + 1, "unexpected end of file");
    if (tok[0] != key || tok.size() < min_tokens) {
      throw ParseError(reader.name(), reader.line(), std::string("expected `") + key + "` record");
    }
  };
  const auto u = [&](std::size_t i) { return detail::parse_uint(tok.at(i), reader); };
  const auto d = [&](std::size_t i) { return detail::parse_double(tok.at(i), reader); };
  const auto counted = [&](std::size_t n, std::size_t width) {
    if (tok.size() != 2 + n * width) {
      throw ParseError(reader.name(), reader.line(), "record length does not match its count");
    }
  };

  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "NETCLUS-INDEX") {
    throw ValidationError(reader.name() + " is not a NetClus index file");
  }
  if (tok[1] != std::to_string(kIndexFormatVersion)) {
    throw ValidationError(reader.name() + ": unsupported index format version " + tok[1] +
                          " (expected " + std::to_string(kIndexFormatVersion) + ")");
  }
  expect("gamma", 6);
  idx.gamma_ = d(1);
  idx.tau_min_ = d(3);
  idx.tau_max_ = d(5);
  expect("counting", 4);
  idx.gdsp_.counting = tok[1] == "fm" ? Counting::kFm : Counting::kExact;
  idx.gdsp_.fm_registers = u(2);
  idx.gdsp_.fm_seed = u(3);
  expect("instances", 2);
  idx.instances_.resize(u(1));
  const std::size_t n_nodes = idx.net_.node_count();
  for (IndexInstance& inst : idx.instances_) {
    expect("instance", 5);
    inst.p = static_cast<int>(u(1));
    inst.radius = d(2);
    inst.clusters.resize(u(3));
    inst.stats.mean_dominating_set = d(4);
    inst.cluster_of.assign(n_nodes, 0);
    for (Cluster& g : inst.clusters) {
      expect("cluster", 5);
      g.id = static_cast<ClusterId>(u(1));
      g.center = static_cast<NodeId>(u(2));
      if (tok[3] != "-") g.representative = static_cast<NodeId>(u(3));
      g.representative_round_trip = d(4);
      expect("members", 2);
      counted(u(1), 2);
      for (std::size_t i = 0; i < u(1); ++i) {
        const auto v = static_cast<NodeId>(u(2 + 2 * i));
        if (v >= n_nodes) throw ValidationError(reader.name() + ": member node out of range");
        g.members.push_back({v, d(3 + 2 * i)});
        inst.cluster_of[v] = g.id;
      }
      expect("tl", 2);
      counted(u(1), 2);
      for (std::size_t i = 0; i < u(1); ++i) {
        g.trajectories.push_back({detail::parse_int(tok[2 + 2 * i], reader), d(3 + 2 * i)});
      }
      expect("cl", 2);
      counted(u(1), 2);
      for (std::size_t i = 0; i < u(1); ++i) {
        g.neighbors.push_back({static_cast<ClusterId>(u(2 + 2 * i)), d(3 + 2 * i)});
      }
    }
    expect("sequences", 2);
    const std::size_t count = u(1);
    for (std::size_t s = 0; s < count; ++s) {
      expect("cc", 3);
      const TrajectoryId id = detail::parse_int(tok[1], reader);
      const std::size_t len = u(2);
      if (tok.size() != 3 + len) {
        throw ParseError(reader.name(), reader.line(), "record length does not match its count");
      }
      std::vector<ClusterId> seq;
      for (std::size_t i = 0; i < len; ++i) seq.push_back(static_cast<ClusterId>(u(3 + i)));
      inst.sequences.emplace(id, std::move(seq));
    }
    inst.refresh_stats();
  }
  return idx;
}

void write_index_stats(std::ostream& out, const NetClusIndex& index) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "gamma " << index.gamma() << "  tau_min " << index.tau_min() << "  tau_max "
      << index.tau_max() << "  instances " << index.instance_count() << '\n';
  out << std::setw(3) << "p" << std::setw(12) << "R_p" << std::setw(10) << "eta_p" << std::setw(12)
      << "mean|Lam|" << std::setw(10) << "mean|TL|" << std::setw(10) << "mean|CL|" << std::setw(8)
      << "xi_p" << std::setw(10) << "lambda_p" << std::setw(10) << "build_s" << '\n';
  for (const IndexInstance& inst : index.instances()) {
    const InstanceStats& s = inst.stats;
    out << std::setw(3) << inst.p << std::setw(12) << std::fixed << std::setprecision(2)
        << inst.radius << std::setw(10) << s.clusters << std::setw(12) << s.mean_dominating_set
        << std::setw(10) << s.mean_trajectory_list << std::setw(10) << s.mean_neighbor_list
        << std::setw(8) << s.max_trajectories << std::setw(10) << s.max_nodes << std::setw(10)
        << std::setprecision(3) << s.build_seconds << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace netclus
