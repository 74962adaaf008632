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

#include "amonet/substitute.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace amonet {

std::string SubstitutionReport::to_kv() const {
  std::ostringstream out;
  out << "vars_in=" << vars_in << '\n'
      << "vars_out=" << vars_out << '\n'
      << "clauses_in=" << clauses_in << '\n'
      << "clauses_out=" << clauses_out << '\n'
      << "mutexes=" << mutexes << '\n'
      << "duplicate_mutexes=" << duplicate_mutexes << '\n'
      << "encoded=" << num_encoded << '\n'
      << "subsumed=" << num_subsumed << '\n'
      << "size2_retained=" << num_size2_retained << '\n'
      << "aux_added=" << aux_added << '\n'
      << "max_clique=" << max_clique << '\n';
  out << "histogram=";
  bool first = true;
  for (const auto& [size, count] : histogram) {
    if (!first) out << ',';
    out << size << ':' << count;
    first = false;
  }
  out << '\n';
  return out.str();
}

std::vector<std::vector<int>> filter_subsumed(const CliqueClustering& c) {
  std::vector<int> order;
  for (std::size_t i = 0; i < c.clusters.size(); ++i)
    if (c.clusters[i].size() >= 2) order.push_back(static_cast<int>(i));
  // Stable by creation order, so equal sizes keep earliest-created first.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return c.clusters[a].size() > c.clusters[b].size();
  });

  std::vector<std::vector<int>> retained;
  // Containment requires the candidate's least member, so index retained
  // cliques by it to keep the scan short.
  std::map<int, std::vector<int>> by_least;
  for (int idx : order) {
    const std::vector<int>& cand = c.clusters[idx];
    bool subsumed = false;
    for (const auto& [least, ids] : by_least) {
      if (least > cand.front()) break;
      for (int rid : ids) {
        const std::vector<int>& big = retained[rid];
        if (big.size() > cand.size() &&
            std::includes(big.begin(), big.end(), cand.begin(), cand.end())) {
          subsumed = true;
          break;
        }
      }
      if (subsumed) break;
    }
    if (subsumed) continue;
    by_least[cand.front()].push_back(static_cast<int>(retained.size()));
    retained.push_back(cand);
  }
  return retained;
}

std::pair<CnfFormula, SubstitutionReport> substitute_amos(
    const CnfFormula& f, const SubstitutionPlan& plan) {
  if (plan.min_clique_size < 3)
    throw std::invalid_argument("minimum encoded clique size must be >= 3");

  SplitResult split = split_mutexes(f);
  MutexNetwork net = reorder(split.network, plan.ordering, plan.seed);
  CliqueClustering clustering =
      run_detector(net, plan.detector, {plan.allow_large_exact});
  std::vector<std::vector<int>> retained = filter_subsumed(clustering);

  SubstitutionReport report;
  report.vars_in = f.num_vars;
  report.clauses_in = static_cast<long>(f.clauses.size());
  report.mutexes = static_cast<long>(net.size());
  report.duplicate_mutexes = static_cast<long>(split.duplicate_mutexes.size());
  for (const std::vector<int>& cluster : clustering.clusters)
    report.max_clique =
        std::max(report.max_clique, static_cast<int>(cluster.size()));
  for (const std::vector<int>& cluster : retained)
    ++report.histogram[static_cast<int>(cluster.size())];

  long total_size2plus = 0;
  for (const std::vector<int>& cluster : clustering.clusters)
    if (cluster.size() >= 2) ++total_size2plus;

  CnfFormula out;
  out.clauses = split.residual;

  AuxAllocator alloc(f.num_vars + 1);
  // Pairwise-form clauses are deduplicated across blocks: overlapping
  // retained cliques regenerate shared edges, and the rewrite must hand back
  // the exact clause multiset when the encoding is pairwise.
  std::set<std::pair<int, int>> emitted_edges;
  auto emit_edge = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (emitted_edges.insert({u, v}).second) out.clauses.push_back({-u, -v});
  };

  for (const std::vector<int>& cluster : retained) {
    const int size = static_cast<int>(cluster.size());
    if (size >= plan.min_clique_size) {
      ++report.num_encoded;
      if (plan.encoding == AmoKind::pairwise) {
        for (std::size_t i = 0; i < cluster.size(); ++i)
          for (std::size_t j = i + 1; j < cluster.size(); ++j)
            emit_edge(cluster[i], cluster[j]);
      } else {
        EncodedAmo enc = encode_amo(cluster, plan.encoding, alloc);
        report.aux_added += static_cast<long>(enc.aux_vars.size());
        for (Clause& c : enc.clauses) out.clauses.push_back(std::move(c));
      }
    } else if (size == 2) {
      ++report.num_size2_retained;
      emit_edge(cluster[0], cluster[1]);
    } else {
      // Retained but below the encoding threshold: keep as plain mutexes.
      ++report.num_encoded;
      for (std::size_t i = 0; i < cluster.size(); ++i)
        for (std::size_t j = i + 1; j < cluster.size(); ++j)
          emit_edge(cluster[i], cluster[j]);
    }
  }
  report.num_subsumed =
      total_size2plus - report.num_encoded - report.num_size2_retained;

  out.num_vars = alloc.next_var - 1;
  report.vars_out = out.num_vars;
  report.clauses_out = static_cast<long>(out.clauses.size());
  return {std::move(out), report};
}

}  // namespace amonet
