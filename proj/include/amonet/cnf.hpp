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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amonet/errors.hpp"

namespace amonet {

/// Literals are DIMACS-style signed integers: +v for x_v, -v for its
/// negation, never 0.
inline int lit_var(int lit) { return lit < 0 ? -lit : lit; }
inline bool lit_positive(int lit) { return lit > 0; }

/// A clause is a disjunction of literals. Nonempty; no duplicate literal
/// after normalization. Tautologies (v or -v together) are legal and kept.
using Clause = std::vector<int>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;  // order preserved exactly as read

  bool operator==(const CnfFormula&) const = default;
};

struct ParsedCnf {
  CnfFormula formula;
  std::vector<std::string> warnings;
};

/// Reads DIMACS CNF: comment lines start with 'c', one "p cnf <n> <m>"
/// header, then whitespace-separated integers with each clause terminated
/// by 0. Duplicate literals inside a clause are dropped (first occurrence
/// kept). A header/body clause-count mismatch is reported as a warning, not
/// an error; everything else malformed throws parse_error.
ParsedCnf parse_dimacs(std::istream& in);
ParsedCnf parse_dimacs(const std::string& text);

/// Inverse of parse_dimacs modulo comments; every clause ends with "0\n" and
/// the header count matches the actual clause count.
std::string emit_dimacs(const CnfFormula& f);
void emit_dimacs(std::ostream& out, const CnfFormula& f,
                 const std::vector<std::string>& comments = {});

/// A mutex is a binary clause with two negative literals over distinct
/// variables. Returns the variable pair (u, v) with u < v, or nothing.
std::optional<std::pair<int, int>> classify_mutex(const Clause& c);

}  // namespace amonet
