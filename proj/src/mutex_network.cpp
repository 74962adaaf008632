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

#include "amonet/mutex_network.hpp"

#include <algorithm>
#include <stdexcept>

#include "amonet/rng.hpp"

namespace amonet {

Mutex make_mutex(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("mutex endpoints must be positive");
  if (a == b) throw std::invalid_argument("mutex self-loop on variable " +
                                          std::to_string(a));
  if (a > b) std::swap(a, b);
  return Mutex{a, b};
}

MutexNetwork::MutexNetwork(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  adj_.resize(static_cast<std::size_t>(num_vars) + 1);
}

void MutexNetwork::check_var(int v) const {
  if (v < 1 || v > num_vars_)
    throw std::out_of_range("variable " + std::to_string(v) +
                            " outside 1.." + std::to_string(num_vars_));
}

bool MutexNetwork::add_mutex(Mutex m) {
  m = make_mutex(m.u, m.v);
  check_var(m.u);
  check_var(m.v);
  if (adj_[m.u].count(m.v)) return false;
  adj_[m.u].insert(m.v);
  adj_[m.v].insert(m.u);
  edges_.push_back(m);
  return true;
}

bool MutexNetwork::adjacent(int u, int v) const {
  check_var(u);
  check_var(v);
  return adj_[u].count(v) != 0;
}

const std::unordered_set<int>& MutexNetwork::neighbors(int v) const {
  check_var(v);
  return adj_[v];
}

long MutexNetwork::cross_edge_count(const std::vector<int>& a,
                                    const std::vector<int>& b) const {
  std::vector<int> sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  std::sort(sb.begin(), sb.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());

  std::vector<int> a_only, b_only;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                      std::back_inserter(a_only));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                      std::back_inserter(b_only));

  long count = 0;
  for (int x : a_only)
    for (int y : b_only)
      if (adjacent(x, y)) ++count;
  return count;
}

bool MutexNetwork::is_clique(const std::vector<int>& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !adjacent(s[i], s[j])) return false;
  return true;
}

const char* to_string(Ordering mode) {
  return mode == Ordering::original ? "original" : "random";
}

Ordering ordering_from_string(const std::string& name) {
  if (name == "original") return Ordering::original;
  if (name == "random") return Ordering::random;
  throw std::invalid_argument("unknown ordering '" + name +
                              "', expected original|random");
}

MutexNetwork reorder(const MutexNetwork& net, Ordering mode,
                     std::uint64_t seed) {
  std::vector<Mutex> edges = net.edges();
  if (mode == Ordering::random) {
    SplitMix64 rng(seed);
    fisher_yates_shuffle(edges, rng);
  }
  MutexNetwork out(net.num_vars());
  for (const Mutex& m : edges) out.add_mutex(m);
  return out;
}

SplitResult split_mutexes(const CnfFormula& f) {
  SplitResult result{MutexNetwork(f.num_vars), {}, {}};
  for (const Clause& c : f.clauses) {
    if (auto pair = classify_mutex(c)) {
      Mutex m{pair->first, pair->second};
      if (!result.network.add_mutex(m)) result.duplicate_mutexes.push_back(m);
    } else {
      result.residual.push_back(c);
    }
  }
  return result;
}

}  // namespace amonet
