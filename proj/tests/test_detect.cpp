// Copyright 2026 The Amonet Authors
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

#include <doctest.h>
#include <set>

#include "amonet/detect.hpp"
#include "amonet/errors.hpp"
#include "amonet/oracle.hpp"
#include "amonet/rng.hpp"

using namespace amonet;

namespace {

using ClusterSet = std::set<std::vector<int>>;

MutexNetwork network_of(int n, const std::vector<Mutex>& edges) {
  MutexNetwork net(n);
  for (const Mutex& m : edges) net.add_mutex(m);
  return net;
}

ClusterSet as_set(const CliqueClustering& c) {
  return ClusterSet(c.clusters.begin(), c.clusters.end());
}

MutexNetwork random_network(SplitMix64& rng, int n, double p) {
  MutexNetwork net(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.next_double() < p) net.add_mutex({i, j});
  return net;
}

}  // namespace

TEST_CASE("empty network yields only singletons") {
  for (DetectorKind kind : {DetectorKind::exact, DetectorKind::relaxed}) {
    CliqueClustering c = run_detector(MutexNetwork(3), kind);
    CHECK(as_set(c) == ClusterSet{{1}, {2}, {3}});
  }
}

TEST_CASE("exact detector on a single edge and a star") {
  CliqueClustering edge =
      run_detector(network_of(2, {{1, 2}}), DetectorKind::exact);
  CHECK(as_set(edge) == ClusterSet{{1}, {2}, {1, 2}});

  CliqueClustering star =
      run_detector(network_of(3, {{1, 2}, {1, 3}}), DetectorKind::exact);
  for (const std::vector<int>& cluster : star.clusters)
    CHECK(cluster.size() < 3);
}

TEST_CASE("exact detector finds the triangle and all its subsets") {
  CliqueClustering c = run_detector(
      network_of(3, {{1, 2}, {2, 3}, {1, 3}}), DetectorKind::exact);
  ClusterSet want{{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}};
  CHECK(as_set(c) == want);
}

TEST_CASE("exact detector equals brute-force clique enumeration") {
  SplitMix64 rng(321);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(7));
    double p = 0.2 + 0.1 * static_cast<double>(rng.next_below(5));
    MutexNetwork net = random_network(rng, n, p);
    CliqueClustering c = run_detector(net, DetectorKind::exact);
    auto cliques = all_cliques_bruteforce(net);
    CHECK(as_set(c) == ClusterSet(cliques.begin(), cliques.end()));
  }
}

TEST_CASE("exact clustering is ordering-independent") {
  SplitMix64 rng(99);
  MutexNetwork net = random_network(rng, 9, 0.45);
  ClusterSet original = as_set(run_detector(net, DetectorKind::exact));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    MutexNetwork shuffled = reorder(net, Ordering::random, seed);
    CHECK(as_set(run_detector(shuffled, DetectorKind::exact)) == original);
  }
}

TEST_CASE("exact detector guard") {
  CHECK_THROWS_AS(ExactDetector(21), guard_error);
  CHECK_NOTHROW(ExactDetector(21, /*allow_large=*/true));
  CHECK_NOTHROW(ExactDetector(20));

  // Even with the override there is a hard 64-variable mask limit.
  ExactDetector wide(70, /*allow_large=*/true);
  bool threw = false;
  try {
    for (int v = 1; v < 70; ++v) wide.observe({v, v + 1});
  } catch (const guard_error&) {
    threw = true;
  }
  CHECK(threw);
}

TEST_CASE("relaxed detector on a single edge and a triangle") {
  CliqueClustering edge =
      run_detector(network_of(2, {{1, 2}}), DetectorKind::relaxed);
  CHECK(as_set(edge) == ClusterSet{{1}, {2}, {1, 2}});

  CliqueClustering tri = run_detector(
      network_of(3, {{1, 2}, {2, 3}, {1, 3}}), DetectorKind::relaxed);
  CHECK(as_set(tri).count({1, 2, 3}) == 1);
}

TEST_CASE("relaxed detector follows the four-variable clique trace") {
  // One clique on {1,2,3,4}; the full cluster must appear exactly at the
  // sixth mutex, not earlier.
  std::vector<Mutex> order{{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}};
  RelaxedDetector detector(4);
  for (std::size_t i = 0; i < order.size(); ++i) {
    detector.observe(order[i]);
    bool has_k4 = as_set(detector.clustering()).count({1, 2, 3, 4}) == 1;
    CHECK(has_k4 == (i == 5));
  }
}

TEST_CASE("relaxed size ties go to the youngest cluster") {
  // Noise pairs 2-5 and 3-6 arrive first; the triangle 1-2-3 streams in
  // afterwards. Its recovery hinges on the freshly added pairs {1,2} and
  // {1,3} outranking the equally sized noise pairs at the final edge.
  RelaxedDetector d(6);
  d.observe({2, 5});
  d.observe({3, 6});
  d.observe({1, 2});
  d.observe({1, 3});
  d.observe({2, 3});
  CHECK(as_set(d.clustering()).count({1, 2, 3}) == 1);
}

TEST_CASE("attempt_merge requires the full bipartite cross edge set") {
  // Edges 1-3 and 2-3 present: {1,2} x {3} merges.
  {
    RelaxedDetector d(3);
    d.observe({1, 2});
    d.observe({1, 3});
    d.observe({2, 3});
    auto merged = d.attempt_merge({1, 2}, {3});
    REQUIRE(merged.has_value());
    CHECK(*merged == std::vector<int>{1, 2, 3});
  }
  // Only edge 1-3: no merge.
  {
    RelaxedDetector d(3);
    d.observe({1, 2});
    d.observe({1, 3});
    CHECK_FALSE(d.attempt_merge({1, 2}, {3}).has_value());
  }
  // Overlapping clusters: symmetric-difference count decides.
  {
    RelaxedDetector d(3);
    d.observe({1, 2});
    d.observe({2, 3});
    d.observe({1, 3});
    auto merged = d.attempt_merge({1, 2}, {2, 3});
    REQUIRE(merged.has_value());
    CHECK(*merged == std::vector<int>{1, 2, 3});
  }
  // Same behaviour on the exact detector.
  {
    ExactDetector d(3);
    d.observe({1, 2});
    d.observe({1, 3});
    d.observe({2, 3});
    auto merged = d.attempt_merge({1, 2}, {3});
    REQUIRE(merged.has_value());
    CHECK(*merged == std::vector<int>{1, 2, 3});
    CHECK_FALSE(d.attempt_merge({1, 2}, {1, 2, 3}).has_value());
  }
}

TEST_CASE("both detectors stay sound and covering, edge by edge") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 5 + static_cast<int>(rng.next_below(8));
    MutexNetwork net = random_network(rng, n, 0.35);

    ExactDetector exact(n);
    RelaxedDetector relaxed(n);
    MutexNetwork seen(n);
    for (const Mutex& m : net.edges()) {
      seen.add_mutex(m);
      exact.observe(m);
      relaxed.observe(m);
      for (const std::vector<int>& cluster : exact.clustering().clusters)
        CHECK(seen.is_clique(cluster));
      for (const std::vector<int>& cluster : relaxed.clustering().clusters)
        CHECK(seen.is_clique(cluster));
    }
    // Coverage: every edge sits inside some cluster.
    for (DetectorKind kind : {DetectorKind::exact, DetectorKind::relaxed}) {
      CliqueClustering c = run_detector(net, kind);
      for (const Mutex& m : net.edges()) {
        bool covered = false;
        for (const std::vector<int>& cluster : c.clusters) {
          bool has_u = false, has_v = false;
          for (int x : cluster) {
            has_u |= x == m.u;
            has_v |= x == m.v;
          }
          if (has_u && has_v) {
            covered = true;
            break;
          }
        }
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("relaxed cluster count is bounded by n + 2k") {
  SplitMix64 rng(13);
  for (double p : {0.1, 0.5, 0.9}) {
    MutexNetwork net = random_network(rng, 20, p);
    CliqueClustering c = run_detector(net, DetectorKind::relaxed);
    CHECK(c.clusters.size() <= 20 + 2 * net.size());
  }
}

TEST_CASE("relaxed observe adds at most one merged and one pair cluster") {
  SplitMix64 rng(1212);
  RelaxedDetector d(15);
  MutexNetwork net = random_network(rng, 15, 0.5);
  for (const Mutex& m : net.edges()) {
    auto created = d.observe(m);
    CHECK(created.size() <= 2);
    std::vector<int> pair{m.u, m.v};
    if (created.size() == 2) {
      CHECK(created[0].size() >= 3);  // the merged union comes first
      CHECK(created[1] == pair);
    }
  }
}

TEST_CASE("observe reports newly created clusters") {
  RelaxedDetector d(3);
  auto created = d.observe({1, 2});
  CHECK(created == std::vector<std::vector<int>>{{1, 2}});
  ExactDetector e(3);
  CHECK(e.observe({1, 2}) == std::vector<std::vector<int>>{{1, 2}});
  CHECK(e.observe({2, 3}) == std::vector<std::vector<int>>{{2, 3}});
  auto last = e.observe({1, 3});
  CHECK(ClusterSet(last.begin(), last.end()) ==
        ClusterSet{{1, 3}, {1, 2, 3}});
}
