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

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "amonet/bench.hpp"
#include "amonet/cnf.hpp"
#include "amonet/detect.hpp"
#include "amonet/encode.hpp"
#include "amonet/errors.hpp"
#include "amonet/gen.hpp"
#include "amonet/mutex_network.hpp"
#include "amonet/oracle.hpp"
#include "amonet/substitute.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;
constexpr int kExitGuard = 4;

using amonet::AmoKind;
using amonet::CnfFormula;
using amonet::DetectorKind;
using amonet::Ordering;

amonet::ParsedCnf read_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw amonet::parse_error("cannot open '" + path + "'");
  amonet::ParsedCnf parsed = amonet::parse_dimacs(in);
  for (const std::string& w : parsed.warnings)
    std::cerr << "warning: " << path << ": " << w << '\n';
  return parsed;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw amonet::parse_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw amonet::parse_error("write to '" + path + "' failed");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct PlanFlags {
  std::string encoding = "sequential";
  std::string detector = "relaxed";
  std::string order = "original";
  std::uint64_t seed = 1;
  int min_clique = 3;
  bool force_exact = false;

  amonet::SubstitutionPlan to_plan() const {
    amonet::SubstitutionPlan plan;
    plan.encoding = amonet::amo_kind_from_string(encoding);
    plan.detector = amonet::detector_from_string(detector);
    plan.ordering = amonet::ordering_from_string(order);
    plan.seed = seed;
    plan.min_clique_size = min_clique;
    plan.allow_large_exact = force_exact;
    return plan;
  }
};

void add_plan_flags(CLI::App* cmd, PlanFlags& flags, bool with_encoding) {
  if (with_encoding)
    cmd->add_option("--encoding", flags.encoding,
                    "pairwise|binary|sequential|product|commander");
  cmd->add_option("--detector", flags.detector, "exact|relaxed");
  cmd->add_option("--order", flags.order, "original|random");
  cmd->add_option("--seed", flags.seed, "seed for random ordering");
  cmd->add_flag("--force-exact", flags.force_exact,
                "run the exact detector past its variable guard");
  if (with_encoding)
    cmd->add_option("--min-clique", flags.min_clique,
                    "smallest clique size to re-encode (>= 3)");
}

// ---------------------------------------------------------------------------

int cmd_preprocess(const std::string& input, const std::string& output,
                   const PlanFlags& flags) {
  CnfFormula f = read_cnf(input).formula;
  auto [rewritten, report] = amonet::substitute_amos(f, flags.to_plan());
  std::ostringstream text;
  amonet::emit_dimacs(text, rewritten);
  write_file(output, text.str());
  std::cout << report.to_kv();
  return kExitOk;
}

int cmd_gen(const std::string& kind, int n, int d, double p,
            std::uint64_t seed, bool hidden, int holes,
            const std::string& output) {
  CnfFormula f;
  std::vector<std::string> comments;
  if (kind == "mutex-net") {
    amonet::MutexNetParams params{n, d, p, seed, hidden};
    amonet::GeneratedInstance inst = amonet::gen_mutex_net(params);
    f = std::move(inst.formula);
    comments = std::move(inst.comments);
  } else if (kind == "pigeonhole") {
    f = amonet::gen_pigeonhole(holes);
    comments.push_back("pigeonhole K=" + std::to_string(holes));
  } else {
    throw std::invalid_argument("unknown generator '" + kind +
                                "', expected mutex-net|pigeonhole");
  }
  std::ostringstream text;
  amonet::emit_dimacs(text, f, comments);
  write_file(output, text.str());
  std::cout << "wrote " << output << " (" << f.num_vars << " vars, "
            << f.clauses.size() << " clauses)\n";
  return kExitOk;
}

int cmd_cliques(const std::string& input, const PlanFlags& flags, bool dump) {
  CnfFormula f = read_cnf(input).formula;
  amonet::SplitResult split = amonet::split_mutexes(f);
  amonet::MutexNetwork net = amonet::reorder(
      split.network, amonet::ordering_from_string(flags.order), flags.seed);
  amonet::CliqueClustering clustering = amonet::run_detector(
      net, amonet::detector_from_string(flags.detector), {flags.force_exact});
  std::vector<std::vector<int>> retained = amonet::filter_subsumed(clustering);

  if (dump) {
    for (const std::vector<int>& cluster : retained) {
      for (std::size_t i = 0; i < cluster.size(); ++i)
        std::cout << (i ? " " : "") << cluster[i];
      std::cout << '\n';
    }
    return kExitOk;
  }
  std::map<int, long> histogram;
  for (const std::vector<int>& cluster : retained)
    ++histogram[static_cast<int>(cluster.size())];
  for (const auto& [size, count] : histogram)
    std::cout << size << ',' << count << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& input, const PlanFlags& flags) {
  CnfFormula f = read_cnf(input).formula;
  auto [rewritten, report] = amonet::substitute_amos(f, flags.to_plan());
  bool equivalent = amonet::projected_equivalent(f, rewritten, f.num_vars);
  std::cout << (equivalent ? "equivalent" : "NOT equivalent") << " ("
            << flags.detector << ", " << flags.encoding << ", " << flags.order
            << ", n=" << f.num_vars << ")\n";
  return equivalent ? kExitOk : kExitVerification;
}

// One bench cell: preprocess, hand the rewritten instance to the solver (or
// the internal oracle), time both phases.
amonet::BenchRecord bench_cell(const std::string& instance_path,
                               const CnfFormula& f, DetectorKind detector,
                               Ordering ordering, std::uint64_t seed,
                               AmoKind encoding,
                               const amonet::SolverSpec& solver, bool internal,
                               bool force_exact, const std::string& tmp_path) {
  amonet::BenchRecord rec;
  rec.instance = instance_path;
  rec.detector = detector;
  rec.ordering = ordering;
  rec.seed = seed;
  rec.encoding = encoding;

  amonet::SubstitutionPlan plan;
  plan.detector = detector;
  plan.encoding = encoding;
  plan.ordering = ordering;
  plan.seed = seed;
  plan.allow_large_exact = force_exact;

  auto pre_start = std::chrono::steady_clock::now();
  auto [rewritten, report] = amonet::substitute_amos(f, plan);
  rec.preprocess_ms = elapsed_ms(pre_start);
  rec.vars_in = report.vars_in;
  rec.clauses_in = report.clauses_in;
  rec.vars_out = report.vars_out;
  rec.clauses_out = report.clauses_out;
  rec.max_clique = report.max_clique;
  rec.num_encoded = report.num_encoded;

  if (internal) {
    auto solve_start = std::chrono::steady_clock::now();
    bool sat = amonet::solve(rewritten);
    rec.solve_ms = elapsed_ms(solve_start);
    rec.verdict = sat ? amonet::Verdict::sat : amonet::Verdict::unsat;
    return rec;
  }

  std::ostringstream text;
  amonet::emit_dimacs(text, rewritten);
  write_file(tmp_path, text.str());
  amonet::SolveOutcome outcome = amonet::run_solver(solver, tmp_path);
  std::error_code ec;
  std::filesystem::remove(tmp_path, ec);
  rec.solve_ms = outcome.wall_ms;
  rec.verdict = outcome.verdict;
  return rec;
}

int cmd_bench(const std::vector<std::string>& instances,
              const std::string& solver_cmd, double timeout,
              const std::vector<std::string>& encoding_names,
              const std::string& detector_name,
              const std::vector<std::string>& order_names, std::uint64_t seed,
              const std::string& output, int jobs, bool fallback_internal,
              bool force_exact) {
  const bool internal = solver_cmd.empty();
  if (internal && !fallback_internal)
    throw std::invalid_argument(
        "no --solver given; pass --fallback-internal to use the built-in "
        "oracle at guard sizes");
  amonet::SolverSpec solver{solver_cmd, timeout};
  DetectorKind detector = amonet::detector_from_string(detector_name);

  std::vector<AmoKind> encodings;
  for (const std::string& name : encoding_names)
    encodings.push_back(amonet::amo_kind_from_string(name));
  std::vector<Ordering> orderings;
  for (const std::string& name : order_names)
    orderings.push_back(amonet::ordering_from_string(name));

  struct Cell {
    std::string path;
    const CnfFormula* formula;
    Ordering ordering;
    AmoKind encoding;
  };
  std::vector<CnfFormula> formulas;
  formulas.reserve(instances.size());
  std::vector<Cell> cells;
  for (const std::string& path : instances)
    formulas.push_back(read_cnf(path).formula);
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (Ordering ordering : orderings)
      for (AmoKind encoding : encodings)
        cells.push_back({instances[i], &formulas[i], ordering, encoding});

  std::vector<amonet::BenchRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::vector<std::string> errors;
  int guard_failures = 0;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      std::string tmp = std::filesystem::temp_directory_path() /
                        ("amonet-bench-" + std::to_string(getpid()) + "-" +
                         std::to_string(i) + ".cnf");
      try {
        records[i] =
            bench_cell(cell.path, *cell.formula, detector, cell.ordering, seed,
                       cell.encoding, solver, internal, force_exact, tmp);
      } catch (const amonet::guard_error& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        errors.push_back(cell.path + ": " + e.what());
        ++guard_failures;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        errors.push_back(cell.path + ": " + e.what());
      }
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  if (!errors.empty()) {
    for (const std::string& e : errors) std::cerr << "error: " << e << '\n';
    return guard_failures > 0 ? kExitGuard : kExitIo;
  }

  // Proposition 3 makes all decided verdicts of one instance agree; a
  // disagreement means a broken rewrite and poisons every downstream number.
  for (const std::string& path : instances) {
    bool saw_sat = false, saw_unsat = false;
    for (const amonet::BenchRecord& r : records) {
      if (r.instance != path) continue;
      saw_sat |= r.verdict == amonet::Verdict::sat;
      saw_unsat |= r.verdict == amonet::Verdict::unsat;
    }
    if (saw_sat && saw_unsat) {
      std::cerr << "verdict disagreement on " << path
                << ": some encodings answered SAT and others UNSAT\n";
      return kExitVerification;
    }
  }

  std::ostringstream csv;
  csv << amonet::bench_csv_header() << '\n';
  for (const amonet::BenchRecord& r : records)
    csv << amonet::bench_csv_row(r) << '\n';
  if (output.empty()) std::cout << csv.str();
  else {
    write_file(output, csv.str());
    std::cout << "wrote " << records.size() << " records to " << output
              << '\n';
  }
  return kExitOk;
}

// Per-instance deltas against the pairwise baseline, sorted best-first.
int cmd_report(const std::string& csv_path, const std::string& output) {
  std::ifstream in(csv_path);
  if (!in) throw amonet::parse_error("cannot open '" + csv_path + "'");
  std::string line;
  if (!std::getline(in, line) || line != amonet::bench_csv_header())
    throw amonet::parse_error(csv_path + ": not a bench CSV (bad header)");

  struct Row {
    std::string instance, detector, ordering, seed, encoding, verdict;
    double solve_ms = 0;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 14)
      throw amonet::parse_error(csv_path + ": malformed row: " + line);
    Row r;
    r.instance = fields[0];
    r.detector = fields[1];
    r.ordering = fields[2];
    r.seed = fields[3];
    r.encoding = fields[4];
    r.solve_ms = std::stod(fields[12]);
    r.verdict = fields[13];
    rows.push_back(std::move(r));
  }

  std::map<std::string, double> baseline;
  for (const Row& r : rows)
    if (r.encoding == "pairwise")
      baseline[r.instance + '\x1f' + r.detector + '\x1f' + r.ordering +
               '\x1f' + r.seed] = r.solve_ms;

  struct Delta {
    const Row* row;
    double baseline_ms, delta_ms, relative;
  };
  std::vector<Delta> deltas;
  for (const Row& r : rows) {
    if (r.encoding == "pairwise") continue;
    auto it = baseline.find(r.instance + '\x1f' + r.detector + '\x1f' +
                            r.ordering + '\x1f' + r.seed);
    if (it == baseline.end()) {
      std::cerr << "warning: no pairwise baseline for " << r.instance << '\n';
      continue;
    }
    double d = it->second - r.solve_ms;
    deltas.push_back(
        {&r, it->second, d, it->second > 0 ? d / it->second : 0.0});
  }
  std::stable_sort(deltas.begin(), deltas.end(),
                   [](const Delta& a, const Delta& b) {
                     return a.delta_ms > b.delta_ms;
                   });

  std::ostringstream out;
  out << "instance,detector,ordering,seed,encoding,solve_ms,baseline_ms,"
         "delta_ms,relative\n";
  for (const Delta& d : deltas)
    out << d.row->instance << ',' << d.row->detector << ',' << d.row->ordering
        << ',' << d.row->seed << ',' << d.row->encoding << ','
        << d.row->solve_ms << ',' << d.baseline_ms << ',' << d.delta_ms << ','
        << d.relative << '\n';
  if (output.empty()) std::cout << out.str();
  else write_file(output, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "amonet: detects cliques in the mutex network of a CNF formula and "
      "re-encodes them as at-most-one constraints"};
  app.require_subcommand(1);

  // preprocess
  auto* preprocess = app.add_subcommand(
      "preprocess", "rewrite mutex cliques of a DIMACS file as AMOs");
  std::string pre_input, pre_output;
  PlanFlags pre_flags;
  preprocess->add_option("input", pre_input, "DIMACS CNF input")->required();
  preprocess->add_option("output", pre_output, "DIMACS CNF output")
      ->required();
  add_plan_flags(preprocess, pre_flags, true);

  // gen
  auto* gen = app.add_subcommand("gen", "generate benchmark instances");
  std::string gen_kind, gen_output;
  int gen_n = 256, gen_d = 8, gen_holes = 3;
  double gen_p = 0.121;
  std::uint64_t gen_seed = 1;
  bool gen_hidden = false;
  gen->add_option("kind", gen_kind, "mutex-net|pigeonhole")->required();
  gen->add_option("-N,--vars", gen_n, "mutex-net: number of variables");
  gen->add_option("-D,--block", gen_d, "mutex-net: disjunction/clique size");
  gen->add_option("-p,--prob", gen_p, "mutex-net: mutex probability");
  gen->add_option("--seed", gen_seed, "mutex-net: PRNG seed");
  gen->add_flag("--hidden", gen_hidden,
                "mutex-net: plant cliques instead of disjunctions");
  gen->add_option("-K,--holes", gen_holes, "pigeonhole: number of holes");
  gen->add_option("-o,--output", gen_output, "output path")->required();

  // cliques
  auto* cliques = app.add_subcommand(
      "cliques", "print the non-subsumed clique-size histogram");
  std::string cliques_input;
  PlanFlags cliques_flags;
  bool cliques_dump = false;
  cliques->add_option("input", cliques_input, "DIMACS CNF input")->required();
  add_plan_flags(cliques, cliques_flags, false);
  cliques->add_flag("--dump", cliques_dump,
                    "print the clusters themselves, largest first");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check projected equivalence of the rewrite (guarded sizes)");
  std::string verify_input;
  PlanFlags verify_flags;
  verify->add_option("input", verify_input, "DIMACS CNF input")->required();
  add_plan_flags(verify, verify_flags, true);

  // bench
  auto* bench = app.add_subcommand(
      "bench", "preprocess + solve a matrix of (instance, ordering, encoding)");
  std::vector<std::string> bench_inputs;
  std::string bench_solver, bench_output;
  double bench_timeout = 60.0;
  std::vector<std::string> bench_encodings{"pairwise", "binary", "sequential",
                                           "product", "commander"};
  std::vector<std::string> bench_orders{"original"};
  PlanFlags bench_flags;
  int bench_jobs = 1;
  bool bench_fallback = false;
  bench->add_option("inputs", bench_inputs, "DIMACS CNF instances")
      ->required();
  bench->add_option("--solver", bench_solver,
                    "solver command, '{cnf}' replaced by the instance path");
  bench->add_option("--timeout", bench_timeout, "solver timeout in seconds");
  bench->add_option("--encodings,--encoding", bench_encodings,
                    "encodings to run (default: all five)");
  bench->add_option("--detector", bench_flags.detector, "exact|relaxed");
  bench->add_option("--orders,--order", bench_orders, "orderings to run");
  bench->add_option("--seed", bench_flags.seed, "seed for random orderings");
  bench->add_option("-o,--output", bench_output, "CSV output path");
  bench->add_option("--jobs", bench_jobs, "parallel bench cells");
  bench->add_flag("--fallback-internal", bench_fallback,
                  "use the built-in oracle when no solver is configured");
  bench->add_flag("--force-exact", bench_flags.force_exact,
                  "run the exact detector past its variable guard");

  // report
  auto* report = app.add_subcommand(
      "report", "per-instance deltas against the pairwise baseline");
  std::string report_csv, report_output;
  report->add_option("csv", report_csv, "bench CSV input")->required();
  report->add_option("-o,--output", report_output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (preprocess->parsed())
      return cmd_preprocess(pre_input, pre_output, pre_flags);
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_d, gen_p, gen_seed, gen_hidden,
                     gen_holes, gen_output);
    if (cliques->parsed())
      return cmd_cliques(cliques_input, cliques_flags, cliques_dump);
    if (verify->parsed()) return cmd_verify(verify_input, verify_flags);
    if (bench->parsed())
      return cmd_bench(bench_inputs, bench_solver, bench_timeout,
                       bench_encodings, bench_flags.detector, bench_orders,
                       bench_flags.seed, bench_output, bench_jobs,
                       bench_fallback, bench_flags.force_exact);
    if (report->parsed()) return cmd_report(report_csv, report_output);
  } catch (const amonet::guard_error& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const amonet::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
