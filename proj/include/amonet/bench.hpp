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
#include <string>
#include <vector>

#include "amonet/detect.hpp"
#include "amonet/encode.hpp"
#include "amonet/mutex_network.hpp"

namespace amonet {

/// External SAT solver, SAT-competition convention: argv is the template
/// split on whitespace with "{cnf}" replaced by the instance path (appended
/// when absent); exit 10 means SAT, 20 means UNSAT, anything else UNKNOWN.
struct SolverSpec {
  std::string command_template;
  double timeout_sec = 60.0;
};

enum class Verdict { sat, unsat, unknown, timeout };

const char* to_string(Verdict v);

struct SolveOutcome {
  Verdict verdict = Verdict::unknown;
  double wall_ms = 0;
  int exit_code = -1;
};

/// Spawns the solver on one DIMACS file, killing it at the timeout. Throws
/// std::runtime_error when the executable cannot be started.
SolveOutcome run_solver(const SolverSpec& spec, const std::string& cnf_path);

/// One (instance, ordering, encoding) bench cell.
struct BenchRecord {
  std::string instance;
  DetectorKind detector = DetectorKind::relaxed;
  Ordering ordering = Ordering::original;
  std::uint64_t seed = 0;
  AmoKind encoding = AmoKind::pairwise;
  int vars_in = 0;
  long clauses_in = 0;
  int vars_out = 0;
  long clauses_out = 0;
  int max_clique = 0;
  long num_encoded = 0;
  double preprocess_ms = 0;
  double solve_ms = 0;
  Verdict verdict = Verdict::unknown;
};

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);

}  // namespace amonet
