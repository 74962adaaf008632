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

#include "amonet/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace amonet {

namespace {

bool parse_int(const std::string& token, long& out) {
  if (token.empty()) return false;
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  long value = std::strtol(begin, &end, 10);
  if (errno != 0 || end != begin + token.size()) return false;
  out = value;
  return true;
}

// Drops repeated literals, keeping first occurrences. Tautologies stay.
void normalize_clause(Clause& c) {
  Clause seen;
  for (int lit : c) {
    if (std::find(seen.begin(), seen.end(), lit) == seen.end())
      seen.push_back(lit);
  }
  c = std::move(seen);
}

}  // namespace

ParsedCnf parse_dimacs(std::istream& in) {
  ParsedCnf result;
  bool have_header = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  Clause current;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;  // blank line
    if (tok == "c" || tok[0] == 'c') continue;

    if (tok == "p") {
      if (have_header)
        throw parse_error("line " + std::to_string(line_no) +
                          ": duplicate header");
      std::string fmt;
      long n = -1, m = -1;
      std::string n_tok, m_tok, extra;
      if (!(tokens >> fmt >> n_tok >> m_tok) || fmt != "cnf" ||
          !parse_int(n_tok, n) || !parse_int(m_tok, m) || n < 0 || m < 0 ||
          n > 1000000000 || (tokens >> extra))
        throw parse_error("line " + std::to_string(line_no) +
                          ": malformed header, expected 'p cnf <n> <m>'");
      have_header = true;
      declared_vars = n;
      declared_clauses = m;
      result.formula.num_vars = static_cast<int>(n);
      continue;
    }

    do {
      if (!have_header)
        throw parse_error("line " + std::to_string(line_no) +
                          ": clause data before 'p cnf' header");
      long lit = 0;
      if (!parse_int(tok, lit))
        throw parse_error("line " + std::to_string(line_no) +
                          ": non-integer token '" + tok + "'");
      if (lit == 0) {
        if (current.empty())
          throw parse_error("line " + std::to_string(line_no) +
                            ": zero-length clause");
        normalize_clause(current);
        result.formula.clauses.push_back(std::move(current));
        current.clear();
      } else {
        long var = lit < 0 ? -lit : lit;
        if (var > declared_vars)
          throw parse_error("line " + std::to_string(line_no) + ": literal " +
                            std::to_string(lit) + " exceeds declared " +
                            std::to_string(declared_vars) + " variables");
        current.push_back(static_cast<int>(lit));
      }
    } while (tokens >> tok);
  }

  if (!have_header) throw parse_error("missing 'p cnf' header");
  if (!current.empty()) throw parse_error("unterminated clause at end of input");
  if (static_cast<long>(result.formula.clauses.size()) != declared_clauses) {
    result.warnings.push_back(
        "header declares " + std::to_string(declared_clauses) +
        " clauses but " + std::to_string(result.formula.clauses.size()) +
        " were read");
  }
  return result;
}

ParsedCnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void emit_dimacs(std::ostream& out, const CnfFormula& f,
                 const std::vector<std::string>& comments) {
  for (const std::string& comment : comments) out << "c " << comment << '\n';
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  emit_dimacs(out, f);
  return out.str();
}

std::optional<std::pair<int, int>> classify_mutex(const Clause& c) {
  if (c.size() != 2) return std::nullopt;
  if (c[0] >= 0 || c[1] >= 0) return std::nullopt;
  int u = -c[0];
  int v = -c[1];
  if (u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  return std::make_pair(u, v);
}

}  // namespace amonet
