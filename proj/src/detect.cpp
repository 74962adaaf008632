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

#include "amonet/detect.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "amonet/errors.hpp"

namespace amonet {

namespace {

std::vector<int> sorted_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

const char* to_string(DetectorKind kind) {
  return kind == DetectorKind::exact ? "exact" : "relaxed";
}

DetectorKind detector_from_string(const std::string& name) {
  if (name == "exact") return DetectorKind::exact;
  if (name == "relaxed") return DetectorKind::relaxed;
  throw std::invalid_argument("unknown detector '" + name +
                              "', expected exact|relaxed");
}

// ---------------------------------------------------------------------------
// ExactDetector

ExactDetector::ExactDetector(int num_vars, bool allow_large)
    : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  if (num_vars > kExactVarGuard && !allow_large)
    throw guard_error("exact detection refused for " +
                      std::to_string(num_vars) + " > " +
                      std::to_string(kExactVarGuard) +
                      " variables (cluster count is exponential); pass the "
                      "override to proceed");
  rank_.assign(static_cast<std::size_t>(num_vars) + 1, 0);
}

int ExactDetector::rank_of(int var) {
  if (var < 1 || var > num_vars_)
    throw std::out_of_range("variable " + std::to_string(var) +
                            " outside 1.." + std::to_string(num_vars_));
  if (rank_[var] == 0) {
    if (static_cast<int>(rank_var_.size()) >= kExactMaskVars)
      throw guard_error("exact detection limited to " +
                        std::to_string(kExactMaskVars) +
                        " distinct mutex variables");
    rank_var_.push_back(var);
    adj_.push_back(0);
    containing_.push_back({});
    rank_[var] = static_cast<int>(rank_var_.size());
  }
  return rank_[var] - 1;
}

std::vector<int> ExactDetector::members_of(std::uint64_t mask) const {
  std::vector<int> members;
  while (mask) {
    int r = std::countr_zero(mask);
    mask &= mask - 1;
    members.push_back(rank_var_[r]);
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool ExactDetector::try_pair(std::uint64_t a, std::uint64_t b, int skip_u_rank,
                             int skip_v_rank,
                             std::vector<std::uint64_t>* created) {
  if (a == b) return false;
  if (skip_u_rank >= 0 &&
      ((a >> skip_v_rank) & 1 || (b >> skip_u_rank) & 1))
    return false;
  std::uint64_t a_only = a & ~b;
  std::uint64_t b_only = b & ~a;
  if (a_only == 0 || b_only == 0) return false;
  for (std::uint64_t rest = a_only; rest;) {
    int r = std::countr_zero(rest);
    rest &= rest - 1;
    if (b_only & ~adj_[r]) return false;  // some cross edge missing
  }
  std::uint64_t merged = a | b;
  if (!present_.insert(merged).second) return false;
  int index = static_cast<int>(merged_.size());
  merged_.push_back(merged);
  for (std::uint64_t rest = merged; rest;) {
    int r = std::countr_zero(rest);
    rest &= rest - 1;
    containing_[r].push_back(index);
  }
  if (created) created->push_back(merged);
  return true;
}

std::vector<std::vector<int>> ExactDetector::observe(Mutex m) {
  int ru = rank_of(m.u);
  int rv = rank_of(m.v);
  if (ru == rv) throw std::invalid_argument("mutex self-loop");
  adj_[ru] |= 1ull << rv;
  adj_[rv] |= 1ull << ru;

  // Snapshot of the clusters holding each endpoint before this edge.
  std::vector<std::uint64_t> u_side{1ull << ru};
  for (int idx : containing_[ru]) u_side.push_back(merged_[idx]);
  std::vector<std::uint64_t> v_side{1ull << rv};
  for (int idx : containing_[rv]) v_side.push_back(merged_[idx]);

  std::vector<std::uint64_t> created;
  for (std::uint64_t a : u_side)
    for (std::uint64_t b : v_side) try_pair(a, b, ru, rv, &created);

  // Clusters created by this mutex are eligible against each other; the list
  // grows while we sweep it, so every unordered pair gets one attempt.
  for (std::size_t i = 0; i < created.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      try_pair(created[i], created[j], -1, -1, &created);

  std::vector<std::vector<int>> out;
  out.reserve(created.size());
  for (std::uint64_t mask : created) out.push_back(members_of(mask));
  return out;
}

std::optional<std::vector<int>> ExactDetector::attempt_merge(
    const std::vector<int>& a, const std::vector<int>& b) {
  std::uint64_t ma = 0, mb = 0;
  for (int v : a) ma |= 1ull << rank_of(v);
  for (int v : b) mb |= 1ull << rank_of(v);
  std::uint64_t a_only = ma & ~mb;
  std::uint64_t b_only = mb & ~ma;
  if (ma == mb || a_only == 0 || b_only == 0) return std::nullopt;
  for (std::uint64_t rest = a_only; rest;) {
    int r = std::countr_zero(rest);
    rest &= rest - 1;
    if (b_only & ~adj_[r]) return std::nullopt;
  }
  std::uint64_t merged = ma | mb;
  if (present_.insert(merged).second) {
    int index = static_cast<int>(merged_.size());
    merged_.push_back(merged);
    for (std::uint64_t rest = merged; rest;) {
      int r = std::countr_zero(rest);
      rest &= rest - 1;
      containing_[r].push_back(index);
    }
  }
  return members_of(merged);
}

CliqueClustering ExactDetector::clustering() const {
  CliqueClustering out;
  out.clusters.reserve(static_cast<std::size_t>(num_vars_) + merged_.size());
  for (int v = 1; v <= num_vars_; ++v) out.clusters.push_back({v});
  for (std::uint64_t mask : merged_) out.clusters.push_back(members_of(mask));
  return out;
}

// ---------------------------------------------------------------------------
// RelaxedDetector

RelaxedDetector::RelaxedDetector(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  adj_.resize(static_cast<std::size_t>(num_vars) + 1);
  clusters_.reserve(static_cast<std::size_t>(num_vars));
  largest_.assign(static_cast<std::size_t>(num_vars) + 1, 0);
  for (int v = 1; v <= num_vars; ++v) {
    clusters_.push_back({v});
    largest_[v] = v - 1;
  }
}

bool RelaxedDetector::insert_cluster(std::vector<int> members) {
  assert(members.size() >= 2);
  if (!present_.insert(members).second) return false;
  int index = static_cast<int>(clusters_.size());
  for (int w : members)
    if (members.size() >= clusters_[largest_[w]].size()) largest_[w] = index;
  clusters_.push_back(std::move(members));
  return true;
}

std::optional<std::vector<int>> RelaxedDetector::attempt_merge(
    const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> sa = sorted_set(a), sb = sorted_set(b);
  if (sa == sb) return std::nullopt;
  std::vector<int> a_only, b_only;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                      std::back_inserter(a_only));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                      std::back_inserter(b_only));
  if (a_only.empty() || b_only.empty()) return std::nullopt;
  for (int x : a_only)
    for (int y : b_only)
      if (!adj_[x].count(y)) return std::nullopt;
  std::vector<int> merged;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(),
                 std::back_inserter(merged));
  insert_cluster(merged);
  return merged;
}

std::vector<std::vector<int>> RelaxedDetector::observe(Mutex m) {
  m = make_mutex(m.u, m.v);
  if (m.v > num_vars_)
    throw std::out_of_range("variable " + std::to_string(m.v) + " outside 1.." +
                            std::to_string(num_vars_));
  adj_[m.u].insert(m.v);
  adj_[m.v].insert(m.u);

  std::vector<std::vector<int>> created;
  int iu = largest_[m.u];
  int iv = largest_[m.v];
  if (iu != iv) {
    std::size_t before = clusters_.size();
    auto merged = attempt_merge(clusters_[iu], clusters_[iv]);
    if (merged && clusters_.size() > before) created.push_back(*merged);
  }
  std::vector<int> pair{m.u, m.v};
  if (insert_cluster(pair)) created.push_back({m.u, m.v});
  return created;
}

CliqueClustering RelaxedDetector::clustering() const {
  return CliqueClustering{clusters_};
}

// ---------------------------------------------------------------------------

CliqueClustering run_detector(const MutexNetwork& net, DetectorKind kind,
                              const DetectorOptions& opts) {
  if (kind == DetectorKind::exact) {
    ExactDetector detector(net.num_vars(), opts.allow_large_exact);
    for (const Mutex& m : net.edges()) detector.observe(m);
    return detector.clustering();
  }
  RelaxedDetector detector(net.num_vars());
  for (const Mutex& m : net.edges()) detector.observe(m);
  return detector.clustering();
}

}  // namespace amonet
