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

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "amonet/cnf.hpp"

namespace amonet {

/// One mutual exclusion between two variables, stored normalized (u < v).
struct Mutex {
  int u = 0;
  int v = 0;

  bool operator==(const Mutex&) const = default;
};

/// Normalizes and validates a variable pair. Throws std::invalid_argument on
/// a self-loop or a non-positive index.
Mutex make_mutex(int a, int b);

/// The mutex network: an ordered sequence of variable-pair mutexes (arrival
/// order is semantically relevant downstream) plus a symmetric adjacency
/// oracle over variables 1..n. No self-loops, no duplicate edges.
class MutexNetwork {
 public:
  explicit MutexNetwork(int num_vars);

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Mutex>& edges() const { return edges_; }

  /// Appends the edge if not already present, updating adjacency
  /// symmetrically. Returns true iff the edge was fresh. Throws
  /// std::out_of_range when an endpoint exceeds num_vars.
  bool add_mutex(Mutex m);

  bool adjacent(int u, int v) const;
  const std::unordered_set<int>& neighbors(int v) const;

  /// Number of edges strictly between a \ b and b \ a. Edges incident to the
  /// shared part a ∩ b are excluded, so equality with |a\b|*|b\a| means the
  /// full bipartite graph between the exclusive parts is present.
  long cross_edge_count(const std::vector<int>& a,
                        const std::vector<int>& b) const;

  /// True iff every unordered pair in s is an edge. Empty sets and
  /// singletons are cliques.
  bool is_clique(const std::vector<int>& s) const;

 private:
  void check_var(int v) const;

  int num_vars_ = 0;
  std::vector<Mutex> edges_;
  std::vector<std::unordered_set<int>> adj_;  // 1-based
};

enum class Ordering { original, random };

const char* to_string(Ordering mode);
Ordering ordering_from_string(const std::string& name);

/// original: identical copy. random: a seeded Fisher-Yates permutation of
/// the edge sequence (see rng.hpp for the fixed algorithm). Adjacency is the
/// same in both.
MutexNetwork reorder(const MutexNetwork& net, Ordering mode,
                     std::uint64_t seed);

/// Partition of a formula into its mutex network and everything else.
struct SplitResult {
  MutexNetwork network;
  std::vector<Clause> residual;          // original order
  std::vector<Mutex> duplicate_mutexes;  // dropped repeats, in arrival order
};

/// Sends every mutex-classified clause to the network (duplicates dropped
/// and recorded) and every other clause to residual, both in input order.
SplitResult split_mutexes(const CnfFormula& f);

}  // namespace amonet
