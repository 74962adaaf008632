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

#include "amonet/bench.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace amonet {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::sat: return "SAT";
    case Verdict::unsat: return "UNSAT";
    case Verdict::unknown: return "UNKNOWN";
    case Verdict::timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

std::vector<std::string> build_argv(const std::string& command_template,
                                    const std::string& cnf_path) {
  std::vector<std::string> argv;
  std::istringstream words(command_template);
  std::string word;
  bool substituted = false;
  while (words >> word) {
    std::size_t at;
    while ((at = word.find("{cnf}")) != std::string::npos) {
      word.replace(at, 5, cnf_path);
      substituted = true;
    }
    argv.push_back(word);
  }
  if (argv.empty()) throw std::runtime_error("empty solver command");
  if (!substituted) argv.push_back(cnf_path);
  return argv;
}

}  // namespace

SolveOutcome run_solver(const SolverSpec& spec, const std::string& cnf_path) {
  std::vector<std::string> argv = build_argv(spec.command_template, cnf_path);
  std::vector<char*> raw;
  raw.reserve(argv.size() + 1);
  for (std::string& a : argv) raw.push_back(a.data());
  raw.push_back(nullptr);

  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    int devnull = open("/dev/null", O_WRONLY);
    if (devnull >= 0) {
      dup2(devnull, STDOUT_FILENO);
      dup2(devnull, STDERR_FILENO);
      close(devnull);
    }
    execvp(raw[0], raw.data());
    _exit(127);
  }

  SolveOutcome out;
  const auto deadline =
      start + std::chrono::duration<double>(spec.timeout_sec);
  int status = 0;
  bool finished = false;
  bool killed = false;
  for (;;) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      finished = true;
      break;
    }
    if (r < 0) break;
    if (!killed && std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      killed = true;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
  auto end = std::chrono::steady_clock::now();
  out.wall_ms =
      std::chrono::duration<double, std::milli>(end - start).count();

  if (killed) {
    out.verdict = Verdict::timeout;
    out.exit_code = -1;
    return out;
  }
  if (!finished || !WIFEXITED(status)) {
    out.verdict = Verdict::unknown;
    out.exit_code = -1;
    return out;
  }
  out.exit_code = WEXITSTATUS(status);
  if (out.exit_code == 127)
    throw std::runtime_error("could not start solver '" + argv[0] + "'");
  if (out.exit_code == 10) out.verdict = Verdict::sat;
  else if (out.exit_code == 20) out.verdict = Verdict::unsat;
  else out.verdict = Verdict::unknown;
  return out;
}

std::string bench_csv_header() {
  return "instance,detector,ordering,seed,encoding,vars_in,clauses_in,"
         "vars_out,clauses_out,max_clique,num_encoded,preprocess_ms,solve_ms,"
         "verdict";
}

std::string bench_csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.instance << ',' << to_string(r.detector) << ','
      << to_string(r.ordering) << ',' << r.seed << ',' << to_string(r.encoding)
      << ',' << r.vars_in << ',' << r.clauses_in << ',' << r.vars_out << ','
      << r.clauses_out << ',' << r.max_clique << ',' << r.num_encoded << ','
      << r.preprocess_ms << ',' << r.solve_ms << ',' << to_string(r.verdict);
  return out.str();
}

}  // namespace amonet
