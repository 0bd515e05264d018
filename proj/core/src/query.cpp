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

#include "netclus/query.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "greedy_engine.hpp"
#include "netclus/errors.hpp"
#include "netclus/parallel.hpp"

namespace netclus {

namespace {

const TrajectoryEntry* find_entry(const Cluster& g, TrajectoryId id) {
  auto it = std::lower_bound(g.trajectories.begin(), g.trajectories.end(), id,
                             [](const TrajectoryEntry& e, TrajectoryId v) { return e.id < v; });
  return it != g.trajectories.end() && it->id == id ? &*it : nullptr;
}

struct Target {
  NodeId site;
  ClusterId cluster;
  Meters offset;  // d_r(c_i, site)
};

// Best estimate per trajectory for one target, restricted to estimates <= tau.
void scan_target(const IndexInstance& inst, const Target& target, Meters tau,
                 std::unordered_map<TrajectoryId, Meters>& best, std::size_t& accesses) {
  const Cluster& gi = inst.clusters[target.cluster];
  const auto visit = [&](const Cluster& gj, Meters between) {
    for (const TrajectoryEntry& e : gj.trajectories) {
      ++accesses;
      const Meters d = e.detour + between + target.offset;
      if (!(d <= tau)) continue;
      auto [it, inserted] = best.try_emplace(e.id, d);
      if (!inserted && d < it->second) it->second = d;
    }
  };
  visit(gi, 0.0);
  for (const Neighbor& n : gi.neighbors) {
    if (n.round_trip > tau) break;
    visit(inst.clusters[n.cluster], n.round_trip);
  }
}

// Greedy result for a fixed pick order: gains realized in that order.
GreedyResult fixed_order(const CoverageIndex& cov, std::span<const std::uint32_t> picks) {
  detail::GreedyEngine engine(cov);
  GreedyResult result;
  for (std::uint32_t s : picks) {
    const double before = engine.total_utility();
    engine.select(s);
    result.chosen.push_back(cov.sites()[s]);
    result.chosen_positions.push_back(s);
    result.gains.push_back(engine.total_utility() - before);
  }
  result.trajectory_utilities = engine.trajectory_utilities();
  result.utility = engine.total_utility();
  result.covered_trajectories = engine.covered_count();
  return result;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kInstance:
      return "instance";
    case Verdict::kFallbackExact:
      return "fallback-exact";
    case Verdict::kAnyK:
      return "any-k";
  }
  return "unknown";
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kTops:
      return "tops";
    case Variant::kCost:
      return "cost";
    case Variant::kCapacity:
      return "capacity";
    case Variant::kExisting:
      return "existing";
    case Variant::kMarketShare:
      return "market";
  }
  return "unknown";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kNetClus:
      return "netclus";
    case Method::kIncGreedy:
      return "incg";
    case Method::kFmNetClus:
      return "fmnetclus";
    case Method::kFmGreedy:
      return "fmg";
  }
  return "unknown";
}

Variant parse_variant(const std::string& text) {
  for (Variant v : {Variant::kTops, Variant::kCost, Variant::kCapacity, Variant::kExisting,
                    Variant::kMarketShare}) {
    if (to_string(v) == text) return v;
  }
  throw ArgumentError("unknown variant `" + text + "` (tops|cost|capacity|existing|market)");
}

Method parse_method(const std::string& text) {
  for (Method m : {Method::kNetClus, Method::kIncGreedy, Method::kFmNetClus, Method::kFmGreedy}) {
    if (to_string(m) == text) return m;
  }
  throw ArgumentError("unknown method `" + text + "` (netclus|incg|fmnetclus|fmg)");
}

InstanceChoice select_instance(const NetClusIndex& index, Meters tau) {
  if (!(tau > 0.0)) throw ArgumentError("tau must be positive");
  const std::size_t t = index.instance_count();
  if (t == 0) throw ArgumentError("index has no instances");
  if (tau >= index.tau_max()) return {Verdict::kAnyK, t - 1};
  const double slack = 1.0 + 1e-12;
  if (tau * slack < index.tau_min()) return {Verdict::kFallbackExact, 0};
  std::size_t p = 0;
  double lower = index.tau_min();
  for (std::size_t q = 1; q < t; ++q) {
    lower *= 1.0 + index.gamma();
    if (lower > tau * slack) break;
    p = q;
  }
  return {Verdict::kInstance, p};
}

CoverageIndex approx_coverage(const IndexInstance& inst, const PreferenceSpec& spec,
                              std::span<const ExtraSite> extras, ApproxCoverageStats* stats) {
  std::vector<Target> targets;
  for (const Cluster& g : inst.clusters) {
    if (g.representative) targets.push_back({*g.representative, g.id, g.representative_round_trip});
  }
  for (const ExtraSite& e : extras) {
    const bool known = std::any_of(targets.begin(), targets.end(),
                                   [&](const Target& t) { return t.site == e.node; });
    if (!known) targets.push_back({e.node, e.cluster, e.round_trip});
  }
  std::sort(targets.begin(), targets.end(),
            [](const Target& a, const Target& b) { return a.site < b.site; });

  std::vector<NodeId> sites;
  for (const Target& t : targets) sites.push_back(t.site);
  std::vector<TrajectoryId> trajectories;
  std::unordered_map<TrajectoryId, std::uint32_t> position;
  for (const auto& [id, seq] : inst.sequences) {
    position.emplace(id, static_cast<std::uint32_t>(trajectories.size()));
    trajectories.push_back(id);
  }

  std::size_t accesses = 0;
  std::vector<ScoredPair> pairs;
  std::unordered_map<TrajectoryId, Meters> best;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    best.clear();
    scan_target(inst, targets[i], spec.tau(), best, accesses);
    for (const auto& [id, d] : best) {
      auto it = position.find(id);
      if (it == position.end()) continue;
      pairs.push_back({static_cast<std::uint32_t>(i), it->second, spec.score(d)});
    }
  }
  if (stats) {
    stats->accesses = accesses;
    stats->bound = (inst.clusters.size() + extras.size()) * (1 + inst.max_neighbor_list()) *
                   inst.max_trajectory_list();
  }
  return CoverageIndex(std::move(sites), std::move(trajectories), spec, std::move(pairs));
}

Meters approx_detour(const IndexInstance& inst, TrajectoryId t, ClusterId target) {
  const Cluster& gi = inst.clusters.at(target);
  if (!gi.representative) return kUnreachable;
  Meters best = kUnreachable;
  if (const TrajectoryEntry* e = find_entry(gi, t)) best = e->detour + gi.representative_round_trip;
  for (const Neighbor& n : gi.neighbors) {
    if (const TrajectoryEntry* e = find_entry(inst.clusters[n.cluster], t)) {
      best = std::min(best, e->detour + n.round_trip + gi.representative_round_trip);
    }
  }
  return best;
}

CoverageIndex exact_coverage(const NetClusIndex& index, const PreferenceSpec& spec) {
  const SiteTrajectoryDistances dist =
      precompute_site_trajectory_distances(index.network(), index.trajectories(), spec.tau());
  return build_coverage(dist, spec);
}

double evaluate_sites(const RoadNetwork& net, const TrajectoryStore& store,
                      std::span<const NodeId> sites, const PreferenceSpec& spec) {
  std::vector<DistanceMap> from(sites.size()), to(sites.size());
  parallel_for(sites.size(), [&](std::size_t i) {
    from[i] = shortest_paths_from(net, sites[i], Direction::kForward);
    to[i] = shortest_paths_from(net, sites[i], Direction::kReverse);
  });
  std::vector<double> best(store.size(), 0.0);
  parallel_for(store.size(), [&](std::size_t j) {
    const LegDistances legs(net, store[j]);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      best[j] = std::max(best[j], spec.score(detour_distance(store[j], legs, from[i], to[i])));
    }
  });
  double total = 0.0;
  for (double b : best) total += b;
  return total;
}

GreedyResult run_variant(const CoverageIndex& cov, const QueryParams& params, bool sketch) {
  switch (params.variant) {
    case Variant::kTops:
      return sketch ? inc_greedy_fm(cov, params.k, params.fm_registers, params.fm_seed)
                    : inc_greedy(cov, params.k);
    case Variant::kCost:
      return tops_cost(cov, params.costs, params.budget);
    case Variant::kCapacity:
      return tops_capacity(cov, params.k, params.capacities);
    case Variant::kExisting:
      return tops_with_existing(cov, params.k, params.existing);
    case Variant::kMarketShare:
      return tops_market_share(cov, params.beta);
  }
  throw ArgumentError("unknown variant");
}

QueryResult tops_cluster_query(const NetClusIndex& index, const QueryParams& params) {
  const auto start = std::chrono::steady_clock::now();
  QueryResult result;
  result.trajectory_count = index.trajectories().size();
  const Meters tau = params.spec.tau();
  const bool sketch = params.method == Method::kFmNetClus || params.method == Method::kFmGreedy;

  if (params.method == Method::kIncGreedy || params.method == Method::kFmGreedy) {
    if (!(tau > 0.0)) throw ArgumentError("tau must be positive");
    const CoverageIndex cov = exact_coverage(index, params.spec);
    result.candidate_count = cov.site_count();
    result.cover_pairs = cov.pair_count();
    result.greedy = run_variant(cov, params, sketch);
  } else {
    const InstanceChoice choice = select_instance(index, tau);
    result.choice = choice;
    if (choice.verdict == Verdict::kFallbackExact) {
      const CoverageIndex cov = exact_coverage(index, params.spec);
      result.candidate_count = cov.site_count();
      result.cover_pairs = cov.pair_count();
      result.greedy = run_variant(cov, params, false);
    } else {
      const IndexInstance& inst = index.instance(choice.p);
      std::vector<ExtraSite> extras;
      if (params.variant == Variant::kExisting) {
        for (NodeId e : params.existing) {
          if (!index.network().has_node(e)) {
            throw ArgumentError("existing service at unknown node " + std::to_string(e));
          }
          const Cluster& g = inst.clusters[inst.cluster_of[e]];
          auto m = std::lower_bound(g.members.begin(), g.members.end(), e,
                                    [](const ClusterMember& x, NodeId v) { return x.node < v; });
          extras.push_back({e, g.id, m->round_trip});
        }
      }
      const CoverageIndex cov = approx_coverage(inst, params.spec, extras, &result.coverage_stats);
      result.candidate_count = cov.site_count();
      result.cover_pairs = cov.pair_count();
      if (choice.verdict == Verdict::kAnyK && params.variant == Variant::kTops) {
        if (params.k < 1) throw ArgumentError("k must be at least 1");
        std::vector<std::uint32_t> order(cov.site_count());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
          return detail::beats(cov.weight(a), cov.weight(a), a, cov.weight(b), cov.weight(b), b);
        });
        order.resize(std::min(order.size(), params.k));
        result.greedy = fixed_order(cov, order);
        result.greedy.stop_reason =
            order.size() < params.k ? StopReason::kCandidatesExhausted : StopReason::kReachedK;
      } else {
        result.greedy = run_variant(cov, params, sketch);
      }
    }
  }
  if (params.evaluate_exact) {
    result.exact_utility =
        evaluate_sites(index.network(), index.trajectories(), result.greedy.chosen, params.spec);
  }
  result.greedy.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  result.utility_pct = result.trajectory_count ? 100.0 * result.greedy.utility /
                                                     static_cast<double>(result.trajectory_count)
                                               : 0.0;
  return result;
}

}  // namespace netclus
