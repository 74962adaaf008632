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

#include "amonet/encode.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace amonet {

namespace {

// Both recursions fall back to pairwise at this size: at <= 4 variables the
// pairwise constraint is no larger and needs no auxiliaries.
constexpr int kRecursionCutoff = 4;

int ceil_log2(int m) {
  int bits = 0;
  while ((1 << bits) < m) ++bits;
  return bits;
}

int ceil_sqrt(int m) {
  int d = static_cast<int>(std::sqrt(static_cast<double>(m)));
  while (d * d < m) ++d;
  while (d > 1 && (d - 1) * (d - 1) >= m) --d;
  return d;
}

void check_distinct_vars(const std::vector<int>& vars) {
  if (vars.empty()) throw std::invalid_argument("empty variable list");
  std::unordered_set<int> seen;
  for (int v : vars) {
    if (v < 1) throw std::invalid_argument("variable indices must be positive");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable x" + std::to_string(v));
  }
}

void append(EncodedAmo& onto, EncodedAmo&& part) {
  for (Clause& c : part.clauses) onto.clauses.push_back(std::move(c));
  for (int v : part.aux_vars) onto.aux_vars.push_back(v);
}

// AMO over a projection of auxiliaries: product again while it stays large,
// pairwise once small.
EncodedAmo product_projection(const std::vector<int>& vars,
                              AuxAllocator& alloc) {
  if (vars.size() <= 1) return EncodedAmo{{}, {}, AmoKind::product};
  if (vars.size() <= kRecursionCutoff) return pairwise_amo(vars);
  return product_amo(vars, alloc);
}

EncodedAmo commander_recursion(const std::vector<int>& vars,
                               AuxAllocator& alloc) {
  if (vars.size() <= 1) return EncodedAmo{{}, {}, AmoKind::commander};
  if (vars.size() <= kRecursionCutoff) return pairwise_amo(vars);
  return commander_amo(vars, alloc);
}

}  // namespace

const char* to_string(AmoKind kind) {
  switch (kind) {
    case AmoKind::pairwise: return "pairwise";
    case AmoKind::binary: return "binary";
    case AmoKind::sequential: return "sequential";
    case AmoKind::product: return "product";
    case AmoKind::commander: return "commander";
  }
  return "?";
}

AmoKind amo_kind_from_string(const std::string& name) {
  for (AmoKind kind : kAllAmoKinds)
    if (name == to_string(kind)) return kind;
  throw std::invalid_argument(
      "unknown encoding '" + name +
      "', expected pairwise|binary|sequential|product|commander");
}

EncodedAmo pairwise_amo(const std::vector<int>& vars) {
  assert(vars.size() >= 2);
  EncodedAmo out;
  out.kind = AmoKind::pairwise;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      out.clauses.push_back({-vars[i], -vars[j]});
  return out;
}

EncodedAmo binary_amo(const std::vector<int>& vars, AuxAllocator& alloc) {
  const int m = static_cast<int>(vars.size());
  assert(m >= 3);
  EncodedAmo out;
  out.kind = AmoKind::binary;
  const int bits = ceil_log2(m);
  for (int l = 0; l < bits; ++l) out.aux_vars.push_back(alloc.fresh());
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < bits; ++l) {
      int b = out.aux_vars[l];
      out.clauses.push_back({-vars[j], (j >> l) & 1 ? b : -b});
    }
  }
  return out;
}

EncodedAmo sequential_amo(const std::vector<int>& vars, AuxAllocator& alloc) {
  const int m = static_cast<int>(vars.size());
  assert(m >= 3);
  EncodedAmo out;
  out.kind = AmoKind::sequential;
  std::vector<int> s;
  for (int i = 0; i < m - 1; ++i) s.push_back(alloc.fresh());
  out.aux_vars = s;
  // s[i] reads "some variable up to position i is true".
  out.clauses.push_back({-vars[0], s[0]});
  for (int i = 1; i < m - 1; ++i) {
    out.clauses.push_back({-vars[i], s[i]});
    out.clauses.push_back({-s[i - 1], s[i]});
    out.clauses.push_back({-vars[i], -s[i - 1]});
  }
  out.clauses.push_back({-vars[m - 1], -s[m - 2]});
  return out;
}

EncodedAmo product_amo(const std::vector<int>& vars, AuxAllocator& alloc) {
  const int m = static_cast<int>(vars.size());
  assert(m >= 3);
  EncodedAmo out;
  out.kind = AmoKind::product;

  const int d1 = ceil_sqrt(m);            // rows
  const int d2 = (m + d1 - 1) / d1;       // columns; d1 * d2 >= m
  std::vector<int> rows, cols;
  for (int r = 0; r < d1; ++r) rows.push_back(alloc.fresh());
  for (int c = 0; c < d2; ++c) cols.push_back(alloc.fresh());
  out.aux_vars = rows;
  out.aux_vars.insert(out.aux_vars.end(), cols.begin(), cols.end());

  // Row-major placement with row width d2.
  for (int j = 0; j < m; ++j) {
    int r = j / d2;
    int c = j % d2;
    out.clauses.push_back({-vars[j], rows[r]});
    out.clauses.push_back({-vars[j], cols[c]});
  }
  append(out, product_projection(rows, alloc));
  append(out, product_projection(cols, alloc));
  return out;
}

EncodedAmo commander_amo(const std::vector<int>& vars, AuxAllocator& alloc) {
  const int m = static_cast<int>(vars.size());
  assert(m >= 3);
  EncodedAmo out;
  out.kind = AmoKind::commander;

  const int d = ceil_sqrt(m);
  const int small = m / d;
  const int num_large = m % d;  // first groups get the extra variable
  std::vector<int> commanders;
  for (int g = 0; g < d; ++g) commanders.push_back(alloc.fresh());
  out.aux_vars = commanders;

  int pos = 0;
  for (int g = 0; g < d; ++g) {
    const int g_size = small + (g < num_large ? 1 : 0);
    std::vector<int> group(vars.begin() + pos, vars.begin() + pos + g_size);
    pos += g_size;

    Clause at_least{-commanders[g]};
    at_least.insert(at_least.end(), group.begin(), group.end());
    out.clauses.push_back(std::move(at_least));

    std::vector<int> lits{-commanders[g]};
    lits.insert(lits.end(), group.begin(), group.end());
    for (Clause& c : amo_over_literals(lits)) out.clauses.push_back(std::move(c));
  }
  assert(pos == m);
  append(out, commander_recursion(commanders, alloc));
  return out;
}

std::vector<Clause> amo_over_literals(const std::vector<int>& lits) {
  std::unordered_set<int> seen;
  for (int lit : lits)
    if (!seen.insert(lit_var(lit)).second)
      throw std::invalid_argument("two literals on variable x" +
                                  std::to_string(lit_var(lit)));
  std::vector<Clause> out;
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j)
      out.push_back({-lits[i], -lits[j]});
  return out;
}

EncodedAmo encode_amo(const std::vector<int>& vars, AmoKind kind,
                      AuxAllocator& alloc) {
  check_distinct_vars(vars);
  if (vars.size() == 1) return EncodedAmo{{}, {}, kind};
  if (vars.size() == 2)
    return EncodedAmo{{{-vars[0], -vars[1]}}, {}, kind};
  switch (kind) {
    case AmoKind::pairwise: return pairwise_amo(vars);
    case AmoKind::binary: return binary_amo(vars, alloc);
    case AmoKind::sequential: return sequential_amo(vars, alloc);
    case AmoKind::product: return product_amo(vars, alloc);
    case AmoKind::commander: return commander_amo(vars, alloc);
  }
  throw std::invalid_argument("unknown encoding kind");
}

}  // namespace amonet
