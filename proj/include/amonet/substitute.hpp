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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "amonet/cnf.hpp"
#include "amonet/detect.hpp"
#include "amonet/encode.hpp"
#include "amonet/mutex_network.hpp"

namespace amonet {

/// How to rewrite one formula: which detector builds the clustering, which
/// encoding replaces cliques of at least min_clique_size members, and in
/// which order the mutexes are fed to the detector.
struct SubstitutionPlan {
  DetectorKind detector = DetectorKind::relaxed;
  AmoKind encoding = AmoKind::sequential;
  Ordering ordering = Ordering::original;
  std::uint64_t seed = 0;
  int min_clique_size = 3;
  bool allow_large_exact = false;
};

struct SubstitutionReport {
  int vars_in = 0;
  int vars_out = 0;
  long clauses_in = 0;
  long clauses_out = 0;
  long mutexes = 0;
  long duplicate_mutexes = 0;
  long num_encoded = 0;
  long num_subsumed = 0;
  long num_size2_retained = 0;
  long aux_added = 0;
  int max_clique = 0;                // largest cluster in the clustering
  std::map<int, long> histogram;     // filtered clustering, sizes >= 2

  std::string to_kv() const;         // one key=value per line
};

/// Clusters of size >= 2, sorted size-descending (ties by earliest
/// creation); a cluster is dropped iff it is a subset of a retained one, so
/// the result carries no containment relations.
std::vector<std::vector<int>> filter_subsumed(const CliqueClustering& c);

/// The three-phase rewrite: split out the mutex network, cluster it, encode
/// the retained cliques. Output clauses are the residual in original order,
/// then one AMO block per retained clique of size >= min_clique_size
/// (largest first), then the retained 2-cliques as plain mutexes. Auxiliary
/// variables take indices num_vars+1 and up.
std::pair<CnfFormula, SubstitutionReport> substitute_amos(
    const CnfFormula& f, const SubstitutionPlan& plan);

}  // namespace amonet
