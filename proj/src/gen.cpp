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

#include "amonet/gen.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "amonet/rng.hpp"

namespace amonet {

GeneratedInstance gen_mutex_net(const MutexNetParams& params) {
  const int n = params.num_vars;
  const int d = params.block_size;
  const double p = params.mutex_prob;
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (d < 1 || d > n)
    throw std::invalid_argument("block size must be in 1..N");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("mutex probability must be in [0,1]");

  GeneratedInstance out;
  out.formula.num_vars = n;

  std::vector<std::vector<int>> blocks;
  for (int start = 1; start <= n; start += d) {
    std::vector<int> block;
    for (int v = start; v <= std::min(start + d - 1, n); ++v)
      block.push_back(v);
    blocks.push_back(std::move(block));
  }

  {
    std::ostringstream c;
    c << "mutex-net N=" << n << " D=" << d << " p=" << p
      << " seed=" << params.seed << " hidden=" << (params.hidden ? 1 : 0);
    out.comments.push_back(c.str());
  }

  if (!params.hidden) {
    for (const std::vector<int>& block : blocks) {
      Clause disjunction(block.begin(), block.end());
      out.formula.clauses.push_back(std::move(disjunction));
    }
    SplitMix64 rng(params.seed);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.next_double() < p) out.formula.clauses.push_back({-i, -j});
    return out;
  }

  // Hidden-clique variant: random mutexes first, then the planted cliques
  // block by block; pairs the random phase already emitted appear once.
  out.hidden_cliques = blocks;
  for (const std::vector<int>& block : blocks) {
    std::ostringstream c;
    c << "hidden-clique";
    for (int v : block) c << ' ' << v;
    out.comments.push_back(c.str());
  }

  std::set<std::pair<int, int>> emitted;
  SplitMix64 rng(params.seed);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rng.next_double() < p) {
        out.formula.clauses.push_back({-i, -j});
        emitted.insert({i, j});
      }
    }
  }
  for (const std::vector<int>& block : blocks) {
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        if (emitted.insert({block[a], block[b]}).second)
          out.formula.clauses.push_back({-block[a], -block[b]});
  }
  return out;
}

CnfFormula gen_pigeonhole(int holes) {
  if (holes < 1) throw std::invalid_argument("need at least one hole");
  const int k = holes;
  CnfFormula f;
  f.num_vars = (k + 1) * k;
  for (int pigeon = 1; pigeon <= k + 1; ++pigeon) {
    Clause somewhere;
    for (int hole = 1; hole <= k; ++hole)
      somewhere.push_back(pigeonhole_var(pigeon, hole, k));
    f.clauses.push_back(std::move(somewhere));
  }
  for (int hole = 1; hole <= k; ++hole)
    for (int p1 = 1; p1 <= k + 1; ++p1)
      for (int p2 = p1 + 1; p2 <= k + 1; ++p2)
        f.clauses.push_back(
            {-pigeonhole_var(p1, hole, k), -pigeonhole_var(p2, hole, k)});
  return f;
}

double recovery_score(const CliqueClustering& clustering,
                      const std::vector<std::vector<int>>& hidden) {
  if (hidden.empty()) return 1.0;
  long recovered = 0;
  for (const std::vector<int>& h : hidden) {
    std::vector<int> target(h);
    std::sort(target.begin(), target.end());
    for (const std::vector<int>& cluster : clustering.clusters) {
      if (cluster.size() >= target.size() &&
          std::includes(cluster.begin(), cluster.end(), target.begin(),
                        target.end())) {
        ++recovered;
        break;
      }
    }
  }
  return static_cast<double>(recovered) / static_cast<double>(hidden.size());
}

}  // namespace amonet
