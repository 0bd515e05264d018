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

#include "netclus/coverage.hpp"

#include <doctest.h>

#include "netclus/errors.hpp"
#include "oracles.hpp"

namespace netclus {
namespace {

TEST_CASE("weights and views of a hand table") {
  const CoverageIndex cov = testing::three_site_table();
  CHECK(cov.site_count() == 3);
  CHECK(cov.trajectory_count() == 2);
  CHECK(cov.pair_count() == 4);
  CHECK(cov.weight(0) == doctest::Approx(0.4));
  CHECK(cov.weight(1) == doctest::Approx(0.61));
  CHECK(cov.weight(2) == doctest::Approx(0.6));
  CHECK(cov.sites_covering(0).size() == 2);
  CHECK(cov.trajectories_covered_by(2).size() == 1);
  CHECK(*cov.site_index(3) == 2);
  CHECK_FALSE(cov.site_index(9).has_value());
}

TEST_CASE("utility_of") {
  const CoverageIndex cov = testing::three_site_table();
  const std::uint32_t a[] = {0, 1};
  const std::uint32_t b[] = {0, 2};
  CHECK(utility_of(cov, a) == doctest::Approx(0.9));
  CHECK(utility_of(cov, b) == doctest::Approx(1.0));
  CHECK(utility_of(cov, {}) == 0.0);
}

TEST_CASE("zero scores are dropped and repeats keep the best") {
  std::vector<ScoredPair> pairs{{0, 0, 0.0}, {0, 1, 0.3}, {0, 1, 0.7}, {1, 0, -1.0}};
  const CoverageIndex cov({1, 2}, {10, 11}, PreferenceSpec::linear(1.0), pairs);
  CHECK(cov.pair_count() == 1);
  CHECK(cov.weight(0) == doctest::Approx(0.7));
  CHECK(cov.weight(1) == 0.0);
  CHECK_THROWS_AS(CoverageIndex({1}, {10}, PreferenceSpec::linear(1.0), {{3, 0, 0.5}}),
                  ArgumentError);
}

struct Dataset {
  RoadNetwork net;
  TrajectoryStore store;
};

Dataset random_dataset(std::uint64_t seed) {
  Dataset d{testing::random_graph(30, 25, seed), {}};
  for (NodeId v = 0; v < 30; v += 3) d.net.set_site(v);
  d.store = testing::random_walks(d.net, 15, 6, seed + 7);
  return d;
}

TEST_CASE("covers match brute-force detours") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Dataset d = random_dataset(seed);
    const auto all = testing::all_pairs(d.net);
    const auto dist = precompute_site_trajectory_distances(d.net, d.store, 20.0);
    const auto spec = PreferenceSpec::linear(14.0);
    const CoverageIndex cov = build_coverage(dist, spec);
    for (std::size_t i = 0; i < cov.site_count(); ++i) {
      double weight = 0.0;
      std::vector<double> scores(cov.trajectory_count(), 0.0);
      for (const CoverEntry& e : cov.trajectories_covered_by(i)) scores[e.index] = e.score;
      for (std::size_t j = 0; j < cov.trajectory_count(); ++j) {
        const double want = spec.score(testing::brute_detour(all, 30, d.store[j], cov.sites()[i]));
        CHECK(scores[j] == doctest::Approx(want));
        weight += want;
      }
      CHECK(cov.weight(i) == doctest::Approx(weight));
    }
    for (std::size_t j = 0; j < cov.trajectory_count(); ++j) {
      for (const CoverEntry& e : cov.sites_covering(j)) {
        const auto tc = cov.trajectories_covered_by(e.index);
        CHECK(std::any_of(tc.begin(), tc.end(),
                          [&](const CoverEntry& x) { return x.index == j && x.score == e.score; }));
      }
    }
  }
}

TEST_CASE("tau above the cutoff is a configuration error") {
  const Dataset d = random_dataset(2);
  const auto dist = precompute_site_trajectory_distances(d.net, d.store, 5.0);
  CHECK_THROWS_AS(build_coverage(dist, PreferenceSpec::binary(6.0)), ConfigError);
}

TEST_CASE("tau zero keeps zero-detour sites") {
  // On-trajectory sites and sites lying on a shortest path between two
  // trajectory nodes.
  const Dataset d = random_dataset(3);
  const auto all = testing::all_pairs(d.net);
  const auto dist = precompute_site_trajectory_distances(d.net, d.store, 5.0);
  const CoverageIndex cov = build_coverage(dist, PreferenceSpec::binary(0.0));
  for (std::size_t j = 0; j < cov.trajectory_count(); ++j) {
    std::vector<NodeId> want, got;
    for (NodeId s : cov.sites()) {
      if (testing::brute_detour(all, 30, d.store[j], s) == 0.0) want.push_back(s);
    }
    for (const CoverEntry& e : cov.sites_covering(j)) got.push_back(cov.sites()[e.index]);
    CHECK(got == want);
    for (NodeId v : d.store[j].nodes) {
      if (d.net.is_site(v)) CHECK(std::find(got.begin(), got.end(), v) != got.end());
    }
  }
}

TEST_CASE("cache returns one cover per key") {
  const Dataset d = random_dataset(4);
  const auto dist = precompute_site_trajectory_distances(d.net, d.store, 10.0);
  CoverageCache cache(dist);
  const auto a = cache.get(PreferenceSpec::binary(6.0));
  const auto b = cache.get(PreferenceSpec::binary(6.0));
  const auto c = cache.get(PreferenceSpec::linear(6.0));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(cache.size() == 2);
}

}  // namespace
}  // namespace netclus
