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

#include <algorithm>
#include <doctest.h>

#include "amonet/cnf.hpp"
#include "amonet/mutex_network.hpp"
#include "amonet/rng.hpp"

using namespace amonet;

namespace {

CnfFormula random_formula(SplitMix64& rng, int num_vars, int num_clauses) {
  CnfFormula f;
  f.num_vars = num_vars;
  for (int c = 0; c < num_clauses; ++c) {
    int len = 1 + static_cast<int>(rng.next_below(4));
    Clause clause;
    for (int i = 0; i < len; ++i) {
      int var = 1 + static_cast<int>(rng.next_below(num_vars));
      int lit = rng.next_below(2) ? var : -var;
      if (std::find(clause.begin(), clause.end(), lit) == clause.end())
        clause.push_back(lit);
    }
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace

TEST_CASE("parse_dimacs reads header, clauses, comments") {
  ParsedCnf p = parse_dimacs("p cnf 3 2\n1 -2 0\n-2 -3 0");
  CHECK(p.formula.num_vars == 3);
  CHECK(p.formula.clauses == std::vector<Clause>{{1, -2}, {-2, -3}});
  CHECK(p.warnings.empty());

  p = parse_dimacs("c comment\np cnf 1 0\n");
  CHECK(p.formula.num_vars == 1);
  CHECK(p.formula.clauses.empty());
}

TEST_CASE("parse_dimacs drops duplicate literals inside a clause") {
  ParsedCnf p = parse_dimacs("p cnf 2 1\n1 1 -2 0");
  CHECK(p.formula.clauses == std::vector<Clause>{{1, -2}});
}

TEST_CASE("parse_dimacs keeps tautologies") {
  ParsedCnf p = parse_dimacs("p cnf 2 1\n1 -1 0");
  CHECK(p.formula.clauses == std::vector<Clause>{{1, -1}});
}

TEST_CASE("parse_dimacs accepts CRLF line endings") {
  ParsedCnf p = parse_dimacs("c x\r\np cnf 2 1\r\n1 -2 0\r\n");
  CHECK(p.formula.num_vars == 2);
  CHECK(p.formula.clauses == std::vector<Clause>{{1, -2}});
}

TEST_CASE("parse_dimacs tolerates a clause-count mismatch with a warning") {
  ParsedCnf p = parse_dimacs("p cnf 2 5\n1 0\n-2 0\n");
  CHECK(p.formula.clauses.size() == 2);
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("declares 5") != std::string::npos);
}

TEST_CASE("parse_dimacs rejects malformed input") {
  CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1 extra\n1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), parse_error);          // no header
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), parse_error);   // range
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n-3 0\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), parse_error);  // empty clause
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 a 0\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -2\n"), parse_error);  // no zero
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 0\np cnf 1 0\n"), parse_error);
}

TEST_CASE("emit_dimacs output is byte-exact") {
  CnfFormula f{3, {{1, -2}, {-2, -3}}};
  CHECK(emit_dimacs(f) == "p cnf 3 2\n1 -2 0\n-2 -3 0\n");
  CHECK(emit_dimacs(CnfFormula{1, {}}) == "p cnf 1 0\n");
}

TEST_CASE("parse(emit(f)) round-trips") {
  SplitMix64 rng(42);
  for (int iteration = 0; iteration < 50; ++iteration) {
    CnfFormula f = random_formula(rng, 2 + iteration % 9, 1 + iteration % 12);
    CHECK(parse_dimacs(emit_dimacs(f)).formula == f);
  }
}

TEST_CASE("classify_mutex accepts exactly negative binary clauses") {
  CHECK(classify_mutex({-3, -7}) == std::pair{3, 7});
  CHECK(classify_mutex({-7, -3}) == std::pair{3, 7});  // order-insensitive
  CHECK(!classify_mutex({-3, 7}).has_value());
  CHECK(!classify_mutex({3, 7}).has_value());
  CHECK(!classify_mutex({-3, -7, -9}).has_value());
  CHECK(!classify_mutex({-3}).has_value());
  CHECK(!classify_mutex({-3, -3}).has_value());
}

TEST_CASE("split_mutexes partitions the clause list") {
  CnfFormula f{3, {{1, 2, 3}, {-1, -2}, {-2, -3}}};
  SplitResult split = split_mutexes(f);
  CHECK(split.network.edges() == std::vector<Mutex>{{1, 2}, {2, 3}});
  CHECK(split.residual == std::vector<Clause>{{1, 2, 3}});
  CHECK(split.duplicate_mutexes.empty());
}

TEST_CASE("split_mutexes drops and records duplicate mutexes") {
  CnfFormula f{2, {{-1, -2}, {-1, -2}}};
  SplitResult split = split_mutexes(f);
  CHECK(split.network.edges() == std::vector<Mutex>{{1, 2}});
  CHECK(split.residual.empty());
  CHECK(split.duplicate_mutexes == std::vector<Mutex>{{1, 2}});

  SplitResult empty = split_mutexes(CnfFormula{4, {}});
  CHECK(empty.network.size() == 0);
  CHECK(empty.residual.empty());
}

TEST_CASE("split_mutexes loses no clause") {
  SplitMix64 rng(7);
  for (int iteration = 0; iteration < 30; ++iteration) {
    CnfFormula f = random_formula(rng, 2 + iteration % 6, 2 + iteration % 15);
    SplitResult split = split_mutexes(f);
    CHECK(split.network.size() + split.residual.size() +
              split.duplicate_mutexes.size() ==
          f.clauses.size());

    // Reassembling mutexes (normalized), duplicates, and residual gives back
    // the input clause multiset.
    std::vector<Clause> rebuilt = split.residual;
    for (const Mutex& m : split.network.edges())
      rebuilt.push_back({-m.u, -m.v});
    for (const Mutex& m : split.duplicate_mutexes)
      rebuilt.push_back({-m.u, -m.v});
    auto normalize = [](std::vector<Clause> cs) {
      for (Clause& c : cs) std::sort(c.begin(), c.end());
      std::sort(cs.begin(), cs.end());
      return cs;
    };
    CHECK(normalize(rebuilt) == normalize(f.clauses));
  }
}
