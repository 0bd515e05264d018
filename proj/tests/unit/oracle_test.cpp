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

#include <doctest.h>

#include <random>
#include <set>

#include "netclus/errors.hpp"
#include "oracles.hpp"

namespace netclus {
namespace {

TEST_CASE("hand table optimum") {
  const OracleResult r = brute_force_optimal(testing::three_site_table(), 2);
  CHECK(r.chosen == std::vector<NodeId>{1, 3});
  CHECK(r.utility == doctest::Approx(1.0));
  CHECK(r.subsets == 3);
}

TEST_CASE("k = n gives the full-set utility") {
  const OracleResult r = brute_force_optimal(testing::three_site_table(), 3);
  CHECK(r.utility == doctest::Approx(1.0));
  CHECK(r.chosen.size() == 3);
  CHECK(brute_force_optimal(testing::three_site_table(), 7).chosen.size() == 3);
}

TEST_CASE("agrees with recursive enumeration") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 11, k = 1 + rng() % 4;
    const auto psi = testing::random_table(n, 20, 0.3, trial % 2 == 1, rng);
    const OracleResult r = brute_force_optimal(testing::table_coverage(psi), k);
    CHECK(r.utility == doctest::Approx(testing::table_optimum(psi, k)));
    std::vector<std::size_t> pos(r.chosen_positions.begin(), r.chosen_positions.end());
    CHECK(testing::table_utility(psi, pos) == doctest::Approx(r.utility));
    CHECK(std::is_sorted(pos.begin(), pos.end()));
  }
}

TEST_CASE("ties go to the lexicographically smallest set") {
  const CoverageIndex cov = testing::table_coverage({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  CHECK(brute_force_optimal(cov, 2).chosen_positions == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("guards and arguments") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
  std::mt19937_64 rng(1);
  const auto psi = testing::random_table(40, 5, 0.3, true, rng);
  CHECK_THROWS_AS(brute_force_optimal(testing::table_coverage(psi), 10, 1000), GuardError);
  CHECK_THROWS_AS(brute_force_optimal(testing::three_site_table(), 0), ArgumentError);
}

TEST_CASE("floyd-warshall matches bellman-ford") {
  const RoadNetwork net = testing::random_graph(25, 30, 6);
  const auto fw = floyd_warshall(net);
  CHECK(fw == testing::all_pairs(net));
}

TEST_CASE("oracle covers") {
  RoadNetwork net = testing::random_graph(20, 15, 12);
  for (NodeId v = 0; v < 20; ++v) net.set_site(v);
  const TrajectoryStore store = testing::random_walks(net, 10, 5, 3);
  SUBCASE("tau zero keeps zero-detour sites") {
    const auto all = testing::all_pairs(net);
    const CoverageIndex cov = exact_coverage_oracle(net, store, PreferenceSpec::binary(0.0));
    for (std::size_t j = 0; j < store.size(); ++j) {
      std::set<NodeId> want(store[j].nodes.begin(), store[j].nodes.end());
      for (NodeId s = 0; s < 20; ++s) {
        if (testing::brute_detour(all, 20, store[j], s) == 0.0) want.insert(s);
      }
      std::set<NodeId> got;
      for (const CoverEntry& e : cov.sites_covering(j)) got.insert(cov.sites()[e.index]);
      CHECK(got == want);
    }
  }
  SUBCASE("tau zero on a path keeps on-trajectory sites") {
    const RoadNetwork path =
        load_network(testing::fixture("path5/network.txt"), testing::fixture("path5/sites.txt"));
    const TrajectoryStore t = load_trajectories(testing::fixture("trajectories10.txt"), path);
    const CoverageIndex cov = exact_coverage_oracle(path, t, PreferenceSpec::binary(0.0));
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::set<NodeId> on(t[j].nodes.begin(), t[j].nodes.end());
      std::set<NodeId> got;
      for (const CoverEntry& e : cov.sites_covering(j)) got.insert(cov.sites()[e.index]);
      CHECK(got == on);
    }
  }
  SUBCASE("matches the Dijkstra path") {
    const auto spec = PreferenceSpec::linear(15.0);
    const CoverageIndex a = exact_coverage_oracle(net, store, spec);
    const CoverageIndex b =
        build_coverage(precompute_site_trajectory_distances(net, store, 15.0), spec);
    REQUIRE(a.site_count() == b.site_count());
    CHECK(a.pair_count() == b.pair_count());
    for (std::size_t i = 0; i < a.site_count(); ++i)
      CHECK(a.weight(i) == doctest::Approx(b.weight(i)));
  }
  SUBCASE("empty store") {
    const CoverageIndex cov =
        exact_coverage_oracle(net, TrajectoryStore{}, PreferenceSpec::binary(5.0));
    CHECK(cov.trajectory_count() == 0);
    CHECK(cov.pair_count() == 0);
  }
  CHECK_THROWS_AS(
      exact_coverage_oracle(RoadNetwork(kOracleNodeGuard + 1), store, PreferenceSpec::binary(1.0)),
      GuardError);
}

}  // namespace
}  // namespace netclus
