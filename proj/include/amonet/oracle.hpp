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
#include <set>
#include <vector>

#include "amonet/cnf.hpp"
#include "amonet/mutex_network.hpp"

namespace amonet {

/// Desk-scale ground truth. Exhaustive, exact, and guarded: anything beyond
/// the guards throws guard_error instead of silently truncating.

inline constexpr int kMaxProjectedVars = 20;
inline constexpr long kDefaultBranchBudget = 1L << 24;
inline constexpr int kMaxBruteforceVars = 12;

/// Set of satisfying assignments projected onto variables 1..num_projected.
/// Bit i-1 of a model word holds the value of variable i.
struct ModelSet {
  int num_projected = 0;
  std::set<std::uint32_t> models;

  bool operator==(const ModelSet&) const = default;
};

/// Exhaustive backtracking with unit propagation; variables beyond the
/// projection range are existentially quantified. Throws guard_error when
/// num_projected exceeds kMaxProjectedVars or the branch budget runs out.
ModelSet enumerate_models(const CnfFormula& f, int num_projected,
                          long max_branch_nodes = kDefaultBranchBudget);

/// True iff both formulas have the same satisfying assignments when
/// projected onto variables 1..original_n.
bool projected_equivalent(const CnfFormula& f1, const CnfFormula& f2,
                          int original_n,
                          long max_branch_nodes = kDefaultBranchBudget);

/// Plain satisfiability, same engine, no projection. Backs the bench
/// fallback when no external solver is configured.
bool solve(const CnfFormula& f, long max_branch_nodes = kDefaultBranchBudget);

/// Every subset S of {1..n} with |S| >= 1 inducing a complete subgraph,
/// each sorted ascending, enumerated in mask order. Guarded at
/// kMaxBruteforceVars variables.
std::vector<std::vector<int>> all_cliques_bruteforce(const MutexNetwork& net);

}  // namespace amonet
