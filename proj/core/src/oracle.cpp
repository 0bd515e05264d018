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

#include "netclus/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "netclus/errors.hpp"
#include "netclus/parallel.hpp"

namespace netclus {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i is exact at every step; guard the multiplication.
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / i;
  }
  return r;
}

namespace {

struct Best {
  std::vector<std::uint32_t> set;
  double utility = -1.0;
  std::uint64_t subsets = 0;
};

// Enumerates the k-subsets whose smallest element is `first`, in
// lexicographic order.
Best enumerate_from(const CoverageIndex& cov, std::size_t k, std::uint32_t first) {
  const auto n = static_cast<std::uint32_t>(cov.site_count());
  Best best;
  std::vector<std::uint32_t> pick(k);
  std::iota(pick.begin(), pick.end(), first);
  std::vector<double> u(cov.trajectory_count());
  for (;;) {
    std::fill(u.begin(), u.end(), 0.0);
    for (std::uint32_t s : pick) {
      for (const CoverEntry& e : cov.trajectories_covered_by(s))
        u[e.index] = std::max(u[e.index], e.score);
    }
    const double total = std::accumulate(u.begin(), u.end(), 0.0);
    ++best.subsets;
    if (total > best.utility + 1e-12) {
      best.utility = total;
      best.set = pick;
    }
    // Advance positions 1..k-1; position 0 stays at `first`.
    std::size_t i = k;
    while (i > 1 && pick[i - 1] == n - (k - i) - 1) --i;
    if (i <= 1) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace

OracleResult brute_force_optimal(const CoverageIndex& cov, std::size_t k, std::uint64_t guard) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  const std::size_t n = cov.site_count();
  OracleResult result;
  if (n == 0) return result;
  k = std::min(k, n);
  const std::uint64_t count = binomial(n, k);
  if (count > guard) {
    throw GuardError("exhaustive search over C(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") = " + std::to_string(count) + " subsets exceeds the guard of " +
                     std::to_string(guard));
  }
  const std::size_t firsts = n - k + 1;
  std::vector<Best> part(firsts);
  parallel_for(firsts, [&](std::size_t f) {
    part[f] = enumerate_from(cov, k, static_cast<std::uint32_t>(f));
  });
  Best best;
  for (const Best& b : part) {
    best.subsets += b.subsets;
    if (b.utility > best.utility + 1e-12) {
      best.utility = b.utility;
      best.set = b.set;
    }
  }
  result.chosen_positions = best.set;
  for (std::uint32_t s : best.set) result.chosen.push_back(cov.sites()[s]);
  result.utility = best.utility;
  result.subsets = best.subsets;
  return result;
}

std::vector<Meters> floyd_warshall(const RoadNetwork& net) {
  const std::size_t n = net.node_count();
  std::vector<Meters> d(n * n, kUnreachable);
  for (std::size_t u = 0; u < n; ++u) {
    d[u * n + u] = 0.0;
    for (const Edge& e : net.out_edges(static_cast<NodeId>(u))) {
      d[u * n + e.target] = std::min(d[u * n + e.target], e.weight);
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      const Meters uw = d[u * n + w];
      if (uw == kUnreachable) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const Meters cand = uw + d[w * n + v];
        if (cand < d[u * n + v]) d[u * n + v] = cand;
      }
    }
  }
  return d;
}

CoverageIndex exact_coverage_oracle(const RoadNetwork& net, const TrajectoryStore& store,
                                    const PreferenceSpec& spec) {
  const std::size_t n = net.node_count();
  if (n > kOracleNodeGuard) {
    throw GuardError("all-pairs oracle refuses networks above " + std::to_string(kOracleNodeGuard) +
                     " nodes");
  }
  const std::vector<Meters> d = floyd_warshall(net);
  const std::vector<NodeId> sites = net.sites();
  std::vector<TrajectoryId> ids;
  std::vector<ScoredPair> pairs;
  for (std::size_t j = 0; j < store.size(); ++j) {
    const Trajectory& t = store[j];
    ids.push_back(t.id);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const NodeId s = sites[i];
      Meters best = kUnreachable;
      for (std::size_t a = 0; a < t.nodes.size(); ++a) {
        for (std::size_t b = a; b < t.nodes.size(); ++b) {
          const NodeId va = t.nodes[a], vb = t.nodes[b];
          const Meters detour = d[va * n + s] + d[s * n + vb] - d[va * n + vb];
          if (detour < best) best = detour;
        }
      }
      best = std::max(0.0, best);
      const double score = spec.score(best);
      if (score > 0.0) {
        pairs.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), score});
      }
    }
  }
  return CoverageIndex(sites, std::move(ids), spec, std::move(pairs));
}

}  // namespace netclus
