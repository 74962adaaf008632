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

#include <cmath>
#include <doctest.h>

#include "amonet/gen.hpp"
#include "amonet/oracle.hpp"
#include "amonet/substitute.hpp"

using namespace amonet;

TEST_CASE("gen_mutex_net with p=1 is fully meshed and unsatisfiable") {
  GeneratedInstance inst = gen_mutex_net({4, 2, 1.0, 9, false});
  REQUIRE(inst.formula.clauses.size() == 8);
  CHECK(inst.formula.clauses[0] == Clause{1, 2});
  CHECK(inst.formula.clauses[1] == Clause{3, 4});
  CHECK(split_mutexes(inst.formula).network.size() == 6);
  CHECK_FALSE(solve(inst.formula));
  CHECK(inst.hidden_cliques.empty());
}

TEST_CASE("gen_mutex_net with p=0 has only the disjunctions and is SAT") {
  GeneratedInstance inst = gen_mutex_net({4, 2, 0.0, 9, false});
  CHECK(inst.formula.clauses == std::vector<Clause>{{1, 2}, {3, 4}});
  CHECK(solve(inst.formula));
}

TEST_CASE("gen_mutex_net is deterministic in the seed") {
  MutexNetParams params{12, 4, 0.3, 77, false};
  CHECK(gen_mutex_net(params).formula == gen_mutex_net(params).formula);
  params.seed = 78;
  CHECK(gen_mutex_net({12, 4, 0.3, 77, false}).formula !=
        gen_mutex_net(params).formula);
}

TEST_CASE("gen_mutex_net last block may be short") {
  GeneratedInstance inst = gen_mutex_net({7, 3, 0.0, 1, false});
  CHECK(inst.formula.clauses ==
        std::vector<Clause>{{1, 2, 3}, {4, 5, 6}, {7}});
}

TEST_CASE("gen_mutex_net block shapes at benchmark scale") {
  GeneratedInstance a = gen_mutex_net({256, 8, 0.121, 1, false});
  long disjunctions = 0;
  for (const Clause& c : a.formula.clauses)
    if (c.size() > 2 || (c.size() >= 1 && c[0] > 0)) {
      ++disjunctions;
      CHECK(c.size() == 8);
    }
  CHECK(disjunctions == 32);

  GeneratedInstance b = gen_mutex_net({256, 12, 0.205, 1, false});
  std::vector<std::size_t> sizes;
  for (const Clause& c : b.formula.clauses)
    if (c[0] > 0) sizes.push_back(c.size());
  REQUIRE(sizes.size() == 22);  // ceil(256 / 12)
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) CHECK(sizes[i] == 12);
  CHECK(sizes.back() == 4);
}

TEST_CASE("gen_mutex_net mutex count matches its expectation") {
  const int n = 20;
  const double p = 0.3;
  const int pairs = n * (n - 1) / 2;
  const int samples = 100;
  double total = 0;
  for (int seed = 0; seed < samples; ++seed) {
    GeneratedInstance inst =
        gen_mutex_net({n, 4, p, static_cast<std::uint64_t>(seed), false});
    total += static_cast<double>(split_mutexes(inst.formula).network.size());
  }
  double mean = total / samples;
  double stderr_mean = std::sqrt(pairs * p * (1 - p) / samples);
  CHECK(std::abs(mean - pairs * p) <= 5 * stderr_mean);
}

TEST_CASE("hidden instances plant cliques after the random phase") {
  GeneratedInstance inst = gen_mutex_net({6, 3, 0.0, 5, true});
  CHECK(inst.hidden_cliques ==
        std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
  // p = 0: exactly the two planted cliques, three mutexes each.
  CHECK(inst.formula.clauses.size() == 6);
  CliqueClustering c =
      run_detector(split_mutexes(inst.formula).network, DetectorKind::exact);
  CHECK(recovery_score(c, inst.hidden_cliques) == 1.0);
}

TEST_CASE("hidden instances do not duplicate random-phase mutexes") {
  GeneratedInstance inst = gen_mutex_net({4, 2, 1.0, 5, true});
  // All six pairs appear in the random phase; the planted cliques add none.
  CHECK(inst.formula.clauses.size() == 6);
  SplitResult split = split_mutexes(inst.formula);
  CHECK(split.duplicate_mutexes.empty());
  CHECK(split.network.size() == 6);
}

TEST_CASE("generator comments carry provenance") {
  GeneratedInstance inst = gen_mutex_net({4, 2, 0.5, 7, true});
  REQUIRE(inst.comments.size() == 3);
  CHECK(inst.comments[0] == "mutex-net N=4 D=2 p=0.5 seed=7 hidden=1");
  CHECK(inst.comments[1] == "hidden-clique 1 2");
  CHECK(inst.comments[2] == "hidden-clique 3 4");
}

TEST_CASE("gen_pigeonhole shapes") {
  CnfFormula k1 = gen_pigeonhole(1);
  CHECK(k1.num_vars == 2);
  CHECK(k1.clauses == std::vector<Clause>{{1}, {2}, {-1, -2}});
  CHECK_FALSE(solve(k1));

  CnfFormula k2 = gen_pigeonhole(2);
  CHECK(k2.num_vars == 6);
  CHECK(k2.clauses.size() == 9);  // 3 disjunctions + 2 holes x 3 mutexes

  CHECK_FALSE(solve(gen_pigeonhole(3)));
  CHECK(gen_pigeonhole(10).num_vars == 110);
  CHECK_THROWS_AS(gen_pigeonhole(0), std::invalid_argument);
}

TEST_CASE("pigeonhole hole cliques have size K+1") {
  const int k = 4;
  CnfFormula f = gen_pigeonhole(k);
  MutexNetwork net = split_mutexes(f).network;
  for (int hole = 1; hole <= k; ++hole) {
    std::vector<int> clique;
    for (int pigeon = 1; pigeon <= k + 1; ++pigeon)
      clique.push_back(pigeonhole_var(pigeon, hole, k));
    CHECK(clique.size() == k + 1);
    CHECK(net.is_clique(clique));
  }
}

TEST_CASE("recovery_score") {
  CliqueClustering c{{{1}, {2}, {3}, {1, 2, 3, 4}}};
  CHECK(recovery_score(c, {{1, 2, 3}}) == 1.0);  // superset counts
  CHECK(recovery_score(c, {{1, 2, 3}, {5, 6}}) == 0.5);
  CliqueClustering singles{{{1}, {2}}};
  CHECK(recovery_score(singles, {{1, 2}}) == 0.0);
  CHECK(recovery_score(singles, {}) == 1.0);
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(gen_mutex_net({0, 1, 0.5, 1, false}), std::invalid_argument);
  CHECK_THROWS_AS(gen_mutex_net({4, 5, 0.5, 1, false}), std::invalid_argument);
  CHECK_THROWS_AS(gen_mutex_net({4, 2, 1.5, 1, false}), std::invalid_argument);
}
