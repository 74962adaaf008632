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

#include <string>
#include <vector>

#include "amonet/cnf.hpp"

namespace amonet {

enum class AmoKind { pairwise, binary, sequential, product, commander };

inline constexpr AmoKind kAllAmoKinds[] = {
    AmoKind::pairwise, AmoKind::binary, AmoKind::sequential, AmoKind::product,
    AmoKind::commander};

const char* to_string(AmoKind kind);
AmoKind amo_kind_from_string(const std::string& name);

/// Hands out fresh auxiliary variable indices, strictly increasing, starting
/// after the original variables of the formula being rewritten.
struct AuxAllocator {
  int next_var = 1;

  explicit AuxAllocator(int first_free) : next_var(first_free) {}

  int fresh() { return next_var++; }
};

/// One encoded at-most-one constraint: the clauses plus the auxiliary
/// variables they mention (in allocation order).
struct EncodedAmo {
  std::vector<Clause> clauses;
  std::vector<int> aux_vars;
  AmoKind kind = AmoKind::pairwise;
};

/// At most one of vars is true. Inputs of size <= 2 always get the pairwise
/// result (0 or 1 clause, no auxiliaries) whatever kind asks for. Throws
/// std::invalid_argument on an empty list or duplicate variables.
EncodedAmo encode_amo(const std::vector<int>& vars, AmoKind kind,
                      AuxAllocator& alloc);

/// m(m-1)/2 binary clauses, one per unordered pair, no auxiliaries. m >= 2.
EncodedAmo pairwise_amo(const std::vector<int>& vars);

/// ceil(log2 m) auxiliary bits; the variable at position j carries code j-1,
/// least significant bit first. m * ceil(log2 m) clauses. m >= 3.
EncodedAmo binary_amo(const std::vector<int>& vars, AuxAllocator& alloc);

/// Single-row sequential counter bounding the partial sum by one:
/// m-1 auxiliaries, 3m-4 clauses. m >= 3.
EncodedAmo sequential_amo(const std::vector<int>& vars, AuxAllocator& alloc);

/// Places variables on a ceil(sqrt(m)) x ceil(m/ceil(sqrt(m))) grid, forces
/// the row and column flags of a true variable, and recursively bounds each
/// projection (product again above size 4, else pairwise). m >= 3.
EncodedAmo product_amo(const std::vector<int>& vars, AuxAllocator& alloc);

/// Splits vars into ceil(sqrt(m)) contiguous balanced groups with one
/// commander each; inside a group, at most one of {-c, y_1..y_g} holds and
/// c implies some y; commanders get their own AMO (commander again above
/// size 4, else pairwise). m >= 3.
EncodedAmo commander_amo(const std::vector<int>& vars, AuxAllocator& alloc);

/// Pairwise clauses (~a | ~b) over arbitrary literals, double negation
/// normalized away. Throws std::invalid_argument when two literals share a
/// variable.
std::vector<Clause> amo_over_literals(const std::vector<int>& lits);

}  // namespace amonet
