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

#include "netclus/variants.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "netclus/errors.hpp"
#include "oracles.hpp"

namespace netclus {
namespace {

CostModel costs_of(std::initializer_list<std::pair<const NodeId, double>> list) {
  CostModel c;
  c.cost = list;
  return c;
}

TEST_CASE("budgeted selection on the hand table") {
  const CoverageIndex cov = testing::three_site_table();
  const GreedyResult r = tops_cost(cov, costs_of({{1, 1.0}, {2, 2.0}, {3, 1.0}}), 2.0);
  CHECK(r.chosen == std::vector<NodeId>{3, 1});
  REQUIRE(r.gains.size() == 2);
  CHECK(r.gains[0] == doctest::Approx(0.6));
  // s3 leaves T1 uncovered, so s1 adds its full 0.4.
  CHECK(r.gains[1] == doctest::Approx(0.4));
  CHECK(r.utility == doctest::Approx(1.0));
  CHECK(r.total_cost == doctest::Approx(2.0));
  CHECK_FALSE(r.returned_single_best);
}

TEST_CASE("budget below every cost") {
  const GreedyResult r = tops_cost(testing::three_site_table(),
                                   CostModel::uniform(std::vector<NodeId>{1, 2, 3}, 5.0), 1.0);
  CHECK(r.chosen.empty());
  CHECK(r.utility == 0.0);
}

TEST_CASE("the single best site wins when the ratio set is worse") {
  // Cheap small site vs one expensive site covering everything.
  const CoverageIndex cov = testing::table_coverage({{1, 0, 0, 0}, {1, 1, 1, 1}});
  const GreedyResult r = tops_cost(cov, costs_of({{1, 1.0}, {2, 10.0}}), 10.0);
  CHECK(r.chosen == std::vector<NodeId>{2});
  CHECK(r.returned_single_best);
  CHECK(r.utility == doctest::Approx(4.0));
}

TEST_CASE("missing cost without a default") {
  CHECK_THROWS_AS(tops_cost(testing::three_site_table(), costs_of({{1, 1.0}}), 2.0), Error);
}

TEST_CASE("capacitated selection on the hand table") {
  CapacityModel caps;
  caps.capacity = {{1, 2}, {2, 1}, {3, 1}};
  const GreedyResult r = tops_capacity(testing::three_site_table(), 2, caps);
  CHECK(r.chosen == std::vector<NodeId>{3, 1});
  CHECK(r.utility == doctest::Approx(1.0));
  REQUIRE(r.assignments.size() == 2);
  CHECK(r.assignments[0].trajectories == std::vector<TrajectoryId>{2});
  CHECK(r.assignments[1].trajectories == std::vector<TrajectoryId>{1});
}

TEST_CASE("zero capacity everywhere") {
  CapacityModel caps;
  caps.default_capacity = 0;
  const GreedyResult r = tops_capacity(testing::three_site_table(), 2, caps);
  CHECK(r.utility == 0.0);
}

TEST_CASE("capacity ledgers respect the caps and match the utility") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = testing::random_table(10, 30, 0.4, trial % 2 == 0, rng);
    const CoverageIndex cov = testing::table_coverage(psi);
    CapacityModel caps;
    for (NodeId s = 1; s <= 10; ++s) caps.capacity[s] = rng() % 6;
    const GreedyResult r = tops_capacity(cov, 4, caps);
    std::vector<int> owners(30, 0);
    double total = 0.0;
    for (std::size_t a = 0; a < r.assignments.size(); ++a) {
      const NodeId s = r.assignments[a].site;
      CHECK(r.assignments[a].trajectories.size() <= caps.of(s));
      for (TrajectoryId t : r.assignments[a].trajectories) {
        ++owners[static_cast<std::size_t>(t - 1)];
        total += psi[s - 1][static_cast<std::size_t>(t - 1)];
      }
    }
    for (int o : owners) CHECK(o <= 1);
    CHECK(total == doctest::Approx(r.utility));
  }
}

TEST_CASE("selection over existing services") {
  const NodeId existing[] = {2};
  const GreedyResult r = tops_with_existing(testing::three_site_table(), 1, existing);
  CHECK(r.chosen == std::vector<NodeId>{1});
  CHECK(r.existing_utility == doctest::Approx(0.61));
  CHECK(r.utility == doctest::Approx(0.9));
  CHECK(r.gain_over_existing == doctest::Approx(0.29));

  const NodeId all[] = {1, 2, 3};
  const GreedyResult none = tops_with_existing(testing::three_site_table(), 2, all);
  CHECK(none.chosen.empty());
  CHECK(none.gain_over_existing == 0.0);

  const NodeId unknown[] = {9};
  CHECK_THROWS_AS(tops_with_existing(testing::three_site_table(), 1, unknown), ArgumentError);
}

TEST_CASE("reductions to the plain greedy") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 10, k = 1 + rng() % 5;
    const auto psi = testing::random_table(n, 25, 0.3, trial % 2 == 0, rng);
    const CoverageIndex cov = testing::table_coverage(psi);
    const GreedyResult base = inc_greedy(cov, k);
    CHECK(tops_cost(cov, CostModel::uniform(cov.sites()), static_cast<double>(k)).chosen ==
          base.chosen);
    CHECK(tops_capacity(cov, k, CapacityModel{}).chosen == base.chosen);
    CHECK(tops_with_existing(cov, k, {}).chosen == base.chosen);
  }
}

TEST_CASE("market share") {
  const auto spec = PreferenceSpec::binary(1.0);
  SUBCASE("one heavy site is enough for a small share") {
    const CoverageIndex cov = testing::table_coverage({{1, 1, 1, 0}, {0, 0, 0, 1}}, spec);
    const GreedyResult r = tops_market_share(cov, 0.5);
    CHECK(r.chosen == std::vector<NodeId>{1});
    CHECK(r.coverage_target == 2);
    CHECK(r.stop_reason == StopReason::kTargetReached);
  }
  SUBCASE("full coverage when every trajectory has a site") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
      auto psi = testing::random_table(12, 20, 0.2, true, rng);
      for (std::size_t j = 0; j < 20; ++j) psi[rng() % 12][j] = 1.0;
      const GreedyResult r = tops_market_share(testing::table_coverage(psi, spec), 1.0);
      CHECK(r.covered_trajectories == 20);
      CHECK_FALSE(r.infeasible);
    }
  }
  SUBCASE("an uncoverable trajectory makes the full share infeasible") {
    const CoverageIndex cov = testing::table_coverage({{1, 0}, {1, 0}}, spec);
    const GreedyResult r = tops_market_share(cov, 1.0);
    CHECK(r.infeasible);
    CHECK(r.covered_trajectories == 1);
  }
  SUBCASE("target rounding") {
    const CoverageIndex cov = testing::table_coverage({{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}, spec);
    CHECK(tops_market_share(cov, 0.3).coverage_target == 3);
    CHECK(tops_market_share(cov, 0.31).coverage_target == 4);
  }
  CHECK_THROWS_AS(tops_market_share(testing::three_site_table(), 0.0), ArgumentError);
  CHECK_THROWS_AS(tops_market_share(testing::three_site_table(), 1.5), ArgumentError);
}

}  // namespace
}  // namespace netclus
