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

#include "amonet/oracle.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

#include "amonet/errors.hpp"

namespace amonet {

namespace {

// Counter-based DPLL over the whole variable range. Projected variables are
// branched first (ascending); once they are all assigned, only the existence
// of an extension matters, so the remaining search stops at the first model.
class Enumerator {
 public:
  Enumerator(const CnfFormula& f, int num_projected, long budget)
      : num_projected_(num_projected),
        budget_(budget),
        num_vars_(std::max(f.num_vars, num_projected)) {
    clauses_ = f.clauses;
    value_.assign(num_vars_ + 1, 0);
    occ_pos_.assign(num_vars_ + 1, {});
    occ_neg_.assign(num_vars_ + 1, {});
    n_true_.assign(clauses_.size(), 0);
    n_unassigned_.assign(clauses_.size(), 0);
    unsatisfied_ = static_cast<long>(clauses_.size());
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (clauses_[c].empty()) has_empty_clause_ = true;
      n_unassigned_[c] = static_cast<int>(clauses_[c].size());
      for (int lit : clauses_[c]) {
        int v = lit_var(lit);
        assert(v >= 1 && v <= num_vars_);
        (lit > 0 ? occ_pos_ : occ_neg_)[v].push_back(static_cast<int>(c));
      }
    }
  }

  ModelSet enumerate() {
    ModelSet out;
    out.num_projected = num_projected_;
    if (has_empty_clause_) return out;
    if (!propagate_roots()) return out;
    dfs_projected(out);
    return out;
  }

  bool satisfiable() {
    if (has_empty_clause_) return false;
    if (!propagate_roots()) return false;
    return extension_exists();
  }

 private:
  void charge_node() {
    if (++nodes_ > budget_)
      throw guard_error("oracle branch budget of " + std::to_string(budget_) +
                        " nodes exceeded");
  }

  // Assigns lit true and updates counters. Returns false on an immediately
  // falsified clause; discovered units go to queue_.
  bool assign(int lit) {
    int v = lit_var(lit);
    value_[v] = lit > 0 ? 1 : -1;
    trail_.push_back(lit);
    for (int c : (lit > 0 ? occ_pos_ : occ_neg_)[v]) {
      if (n_true_[c]++ == 0) --unsatisfied_;
    }
    bool ok = true;
    for (int c : (lit > 0 ? occ_neg_ : occ_pos_)[v]) {
      --n_unassigned_[c];
      if (n_true_[c] == 0) {
        if (n_unassigned_[c] == 0) ok = false;
        else if (n_unassigned_[c] == 1) queue_.push_back(c);
      }
    }
    return ok;
  }

  bool propagate() {
    while (!queue_.empty()) {
      int c = queue_.back();
      queue_.pop_back();
      if (n_true_[c] > 0 || n_unassigned_[c] != 1) continue;
      int unit = 0;
      for (int lit : clauses_[c]) {
        if (value_[lit_var(lit)] == 0) {
          unit = lit;
          break;
        }
      }
      assert(unit != 0);
      if (!assign(unit)) return false;
    }
    return true;
  }

  bool propagate_roots() {
    for (std::size_t c = 0; c < clauses_.size(); ++c)
      if (clauses_[c].size() == 1) queue_.push_back(static_cast<int>(c));
    bool ok = propagate();
    queue_.clear();
    return ok;
  }

  bool decide(int lit) {
    bool ok = assign(lit) && propagate();
    queue_.clear();
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int lit = trail_.back();
      trail_.pop_back();
      int v = lit_var(lit);
      value_[v] = 0;
      for (int c : (lit > 0 ? occ_pos_ : occ_neg_)[v]) {
        if (--n_true_[c] == 0) ++unsatisfied_;
      }
      for (int c : (lit > 0 ? occ_neg_ : occ_pos_)[v]) ++n_unassigned_[c];
    }
  }

  int next_unassigned(int from, int last) const {
    for (int v = from; v <= last; ++v)
      if (value_[v] == 0) return v;
    return 0;
  }

  void record_models(ModelSet& out) {
    // All clauses satisfied: every completion of the still-unassigned
    // projected variables is a model.
    std::vector<int> free_vars;
    std::uint32_t base = 0;
    for (int v = 1; v <= num_projected_; ++v) {
      if (value_[v] == 1) base |= 1u << (v - 1);
      else if (value_[v] == 0) free_vars.push_back(v);
    }
    std::uint64_t combos = 1ull << free_vars.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      std::uint32_t model = base;
      for (std::size_t i = 0; i < free_vars.size(); ++i)
        if (bits & (1ull << i)) model |= 1u << (free_vars[i] - 1);
      out.models.insert(model);
    }
  }

  void dfs_projected(ModelSet& out) {
    charge_node();
    if (unsatisfied_ == 0) {
      record_models(out);
      return;
    }
    int v = next_unassigned(1, num_projected_);
    if (v == 0) {
      if (extension_exists()) {
        std::uint32_t model = 0;
        for (int p = 1; p <= num_projected_; ++p)
          if (value_[p] == 1) model |= 1u << (p - 1);
        out.models.insert(model);
      }
      return;
    }
    for (int sign : {1, -1}) {
      std::size_t mark = trail_.size();
      if (decide(sign * v)) dfs_projected(out);
      undo_to(mark);
    }
  }

  bool extension_exists() {
    charge_node();
    if (unsatisfied_ == 0) return true;
    int v = next_unassigned(1, num_vars_);
    assert(v != 0);
    for (int sign : {1, -1}) {
      std::size_t mark = trail_.size();
      if (decide(sign * v) && extension_exists()) {
        undo_to(mark);
        return true;
      }
      undo_to(mark);
    }
    return false;
  }

  int num_projected_;
  long budget_;
  int num_vars_;
  std::vector<Clause> clauses_;
  std::vector<signed char> value_;
  std::vector<std::vector<int>> occ_pos_, occ_neg_;
  std::vector<int> n_true_, n_unassigned_;
  std::vector<int> queue_;
  std::vector<int> trail_;
  long unsatisfied_ = 0;
  long nodes_ = 0;
  bool has_empty_clause_ = false;
};

}  // namespace

ModelSet enumerate_models(const CnfFormula& f, int num_projected,
                          long max_branch_nodes) {
  if (num_projected < 0 || num_projected > kMaxProjectedVars)
    throw guard_error("projection of " + std::to_string(num_projected) +
                      " variables exceeds the guard of " +
                      std::to_string(kMaxProjectedVars));
  Enumerator engine(f, num_projected, max_branch_nodes);
  return engine.enumerate();
}

bool projected_equivalent(const CnfFormula& f1, const CnfFormula& f2,
                          int original_n, long max_branch_nodes) {
  ModelSet m1 = enumerate_models(f1, original_n, max_branch_nodes);
  ModelSet m2 = enumerate_models(f2, original_n, max_branch_nodes);
  return m1.models == m2.models;
}

bool solve(const CnfFormula& f, long max_branch_nodes) {
  Enumerator engine(f, 0, max_branch_nodes);
  return engine.satisfiable();
}

std::vector<std::vector<int>> all_cliques_bruteforce(const MutexNetwork& net) {
  int n = net.num_vars();
  if (n > kMaxBruteforceVars)
    throw guard_error("brute-force clique enumeration limited to " +
                      std::to_string(kMaxBruteforceVars) + " variables, got " +
                      std::to_string(n));
  std::vector<std::vector<int>> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) members.push_back(v);
    if (net.is_clique(members)) cliques.push_back(std::move(members));
  }
  return cliques;
}

}  // namespace amonet
