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
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "amonet/mutex_network.hpp"

namespace amonet {

enum class DetectorKind { exact, relaxed };

const char* to_string(DetectorKind kind);
DetectorKind detector_from_string(const std::string& name);

/// Output of a detector run: clusters in creation order (singletons for all
/// variables first, merged and pair clusters after), each sorted ascending,
/// no repeats. Every cluster induces a complete subgraph of the edges seen;
/// every observed edge has a cluster containing both endpoints.
struct CliqueClustering {
  std::vector<std::vector<int>> clusters;
};

/// The exact detector keeps every discoverable clique, so its cluster count
/// is exponential in the worst case. Refused above this many variables
/// unless the caller opts in.
inline constexpr int kExactVarGuard = 20;
/// Hard ceiling even with the override: clusters are 64-bit member masks
/// over the variables that occur in mutexes.
inline constexpr int kExactMaskVars = 64;

/// On-line exact clique detection: every mutex triggers merge attempts
/// between all cluster pairs containing its endpoints, cascading among the
/// newly created clusters until a fixpoint. After processing a prefix of
/// edges the clustering holds every clique subset of the graph so far.
class ExactDetector {
 public:
  explicit ExactDetector(int num_vars, bool allow_large = false);

  /// Feeds one fresh edge; returns the clusters created by it.
  std::vector<std::vector<int>> observe(Mutex m);

  /// Merge test between two distinct clusters: succeeds when all cross
  /// edges between the exclusive parts exist and there is at least one
  /// such pair; the union is added (kept alongside the originals) and
  /// returned.
  std::optional<std::vector<int>> attempt_merge(const std::vector<int>& a,
                                                const std::vector<int>& b);

  CliqueClustering clustering() const;

 private:
  int rank_of(int var);
  bool try_pair(std::uint64_t a, std::uint64_t b, int skip_u_rank,
                int skip_v_rank, std::vector<std::uint64_t>* created);
  std::vector<int> members_of(std::uint64_t mask) const;

  int num_vars_ = 0;
  std::vector<int> rank_;                     // var -> rank + 1, 0 unranked
  std::vector<int> rank_var_;                 // rank -> var
  std::vector<std::uint64_t> adj_;            // per rank
  std::vector<std::uint64_t> merged_;         // size >= 2, creation order
  std::unordered_set<std::uint64_t> present_;
  std::vector<std::vector<int>> containing_;  // rank -> merged indices
};

/// On-line relaxed clique detection: per mutex a single merge attempt
/// between the largest clusters holding each endpoint, then the two-element
/// cluster {u,v} is added. Size ties go to the most recently created
/// cluster; that keeps a freshly grown cluster selected while the edges of
/// its clique stream in, which is what lets contiguous cliques be recovered
/// at all.
class RelaxedDetector {
 public:
  explicit RelaxedDetector(int num_vars);

  std::vector<std::vector<int>> observe(Mutex m);

  std::optional<std::vector<int>> attempt_merge(const std::vector<int>& a,
                                                const std::vector<int>& b);

  CliqueClustering clustering() const;

  std::size_t cluster_count() const { return clusters_.size(); }

 private:
  bool insert_cluster(std::vector<int> members);

  struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = v.size();
      for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x);
      return h;
    }
  };

  int num_vars_ = 0;
  std::vector<std::unordered_set<int>> adj_;
  std::vector<std::vector<int>> clusters_;  // singletons first, then created
  std::unordered_set<std::vector<int>, VectorHash> present_;
  std::vector<int> largest_;  // var -> index of its largest cluster
};

struct DetectorOptions {
  bool allow_large_exact = false;
};

/// Initializes singleton clusters for all variables, feeds the edges in
/// network order, returns the final clustering.
CliqueClustering run_detector(const MutexNetwork& net, DetectorKind kind,
                              const DetectorOptions& opts = {});

}  // namespace amonet
