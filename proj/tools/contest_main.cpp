// contest: concolic test generation for pure definite logic programs.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 engine error.
// CONTEST_SEED is reserved and ignored; every command is deterministic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "contest/concolic.hpp"
#include "contest/concrete.hpp"
#include "contest/coverage.hpp"
#include "contest/driver.hpp"
#include "contest/error.hpp"
#include "contest/parser.hpp"
#include "contest/printer.hpp"
#include "contest/report.hpp"
#include "contest/solver.hpp"

namespace {

using namespace contest;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kEngine = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1) throw UsageError("bad input position '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<Atom> read_suite(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Atom> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_goal(line));
  }
  return out;
}

std::string answer_text(const Substitution& s) {
  std::string out;
  for (const auto& [v, t] : s) out += (out.empty() ? "" : ", ") + v.name + " = " + to_string(t);
  return out;
}

struct RunArgs {
  std::string file, goal, inp = "1", json;
  std::size_t depth = 2, max_alts = 64, fuel = 100000;
  bool solver_trace = false;
};

int cmd_run(const RunArgs& a) {
  TestSpec spec;
  spec.program = parse_program(read_file(a.file));
  spec.initial_goal = parse_goal(a.goal);
  spec.entry = spec.initial_goal.key();
  spec.input_positions = parse_positions(a.inp);
  spec.depth_bound = a.depth;
  spec.max_alternatives = a.max_alts;
  spec.fuel = a.fuel;
  validate(spec);

  NameSource names;
  DriverHooks hooks;
  if (a.solver_trace) hooks.solver_trace = [](const std::string& line) { std::cerr << line << "\n"; };
  DriverReport report = run_concolic_testing(spec, names, hooks);
  std::vector<Atom> suite;
  for (const TestCase& tc : report.test_cases) suite.push_back(tc.goal);
  CoverageReport cov = measure(spec.program, suite, spec.fuel);
  RunSummary summary = summarize(a.file, spec, report, cov);
  std::cout << render_text(summary);
  if (!a.json.empty()) {
    std::ofstream out(a.json, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + a.json + "'");
    out << to_json(summary).dump(2) << "\n";
  }
  return kOk;
}

struct ExecArgs {
  std::string file, goal;
  std::size_t fuel = 100000;
  bool show_derivation = false, show_concolic = false;
};

int cmd_exec(const ExecArgs& a) {
  Program p = parse_program(read_file(a.file));
  Atom goal = parse_goal(a.goal);
  NameSource names;
  Outcome outcome;
  Substitution answer;
  if (a.show_concolic) {
    ConcolicOptions opts;
    opts.keep_log = true;
    ConcolicRun run = concolic_run(goal, p, a.fuel, names, opts);
    std::cout << to_string(run.initial) << "\n";
    for (const auto& e : run.log)
      std::cout << "  --" << to_string(e.info.rule) << " " << to_string(e.info.label) << "-->\n"
                << to_string(e.after) << "\n";
    std::cout << "trace " << to_string(run.trace) << "\n";
    outcome = run.outcome;
    answer = run.concrete_answer;
  } else {
    ConcreteObserver observer;
    if (a.show_derivation) {
      std::cout << to_string(initial_state(goal)) << "\n";
      observer = [](const StepEvent& e) {
        std::cout << "  --" << to_string(e.info.rule) << "-->\n" << to_string(e.after) << "\n";
      };
    }
    ConcreteRun run = concrete_run(goal, p, a.fuel, names, observer);
    outcome = run.outcome;
    answer = run.answer;
  }
  std::cout << to_string(outcome);
  if (outcome == Outcome::Success && !answer.empty()) std::cout << " " << answer_text(answer);
  std::cout << "\n";
  return kOk;
}

struct CoverageArgs {
  std::string file, suite;
  std::size_t fuel = 100000;
  unsigned threads = 1;
  bool all_solutions = false;
};

int cmd_coverage(const CoverageArgs& a) {
  Program p = parse_program(read_file(a.file));
  std::vector<Atom> suite = read_suite(a.suite);
  CoverageReport r = measure(p, suite, a.fuel, a.threads,
                             a.all_solutions ? CoverageMode::AllSolutions : CoverageMode::FirstAnswer);
  std::cout << render_coverage(r);
  return kOk;
}

struct SolveArgs {
  std::string file, atom;
  std::vector<std::string> pos, neg, ground;
  std::size_t depth = 2;
  bool no_fresh = false, solver_trace = false;
};

int cmd_solve(const SolveArgs& a) {
  UnifProblem prob;
  prob.subject = parse_goal(a.atom);
  for (const auto& s : a.pos) prob.pos.push_back(parse_goal(s));
  for (const auto& s : a.neg) prob.neg.push_back(parse_goal(s));
  for (const auto& g : a.ground) prob.ground_vars.insert(Variable{g});
  prob.depth_bound = a.depth;

  std::vector<Atom> all{prob.subject};
  all.insert(all.end(), prob.pos.begin(), prob.pos.end());
  all.insert(all.end(), prob.neg.begin(), prob.neg.end());
  SolverSignature sig = a.file.empty()
                            ? SolverSignature::from_atoms(all, !a.no_fresh)
                            : SolverSignature::from_program(parse_program(read_file(a.file)),
                                                            !a.no_fresh, all);
  NameSource names;
  for (const Atom& x : all) names.avoid(variables(x));
  PosNegOptions opts;
  if (a.solver_trace) opts.alg1.trace = [](const std::string& line) { std::cerr << line << "\n"; };
  SolverStats stats;
  auto result = pos_neg(prob, sig, names, opts, &stats);
  std::cout << (result ? to_string(*result) : std::string("FAIL")) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concolic test generation for pure definite logic programs"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Generate a test suite by concolic testing");
  run_cmd->add_option("file", run.file, "Program (.pl)")->required();
  run_cmd->add_option("--goal", run.goal, "Initial goal")->required();
  run_cmd->add_option("--inp", run.inp, "Input argument positions, e.g. 1,3");
  run_cmd->add_option("--depth", run.depth, "Depth bound k");
  run_cmd->add_option("--max-alts", run.max_alts, "Alternatives per choice before falling back to singletons");
  run_cmd->add_option("--fuel", run.fuel, "Step limit per execution");
  run_cmd->add_option("--json", run.json, "Write a JSON report");
  run_cmd->add_flag("--solver-trace", run.solver_trace, "Dump solver branches to stderr");

  ExecArgs exec;
  auto* exec_cmd = app.add_subcommand("exec", "Run one goal");
  exec_cmd->add_option("file", exec.file, "Program (.pl)")->required();
  exec_cmd->add_option("--goal", exec.goal, "Goal")->required();
  exec_cmd->add_option("--fuel", exec.fuel, "Step limit");
  auto* deriv = exec_cmd->add_flag("--show-derivation", exec.show_derivation, "Print every concrete state");
  exec_cmd->add_flag("--show-concolic", exec.show_concolic, "Print every concolic state")->excludes(deriv);

  CoverageArgs cov;
  auto* cov_cmd = app.add_subcommand("coverage", "Measure clause and choice coverage of a suite");
  cov_cmd->add_option("file", cov.file, "Program (.pl)")->required();
  cov_cmd->add_option("--suite", cov.suite, "One goal per line, % comments")->required();
  cov_cmd->add_option("--fuel", cov.fuel, "Step limit per goal");
  cov_cmd->add_option("--threads", cov.threads, "Worker threads")->check(CLI::PositiveNumber);
  cov_cmd->add_flag("--all-solutions", cov.all_solutions, "Count full executions instead of first answers");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one positive/negative unifiability problem");
  solve_cmd->add_option("file", solve.file, "Program supplying the signature (optional)");
  solve_cmd->add_option("--atom", solve.atom, "Subject atom")->required();
  solve_cmd->add_option("--pos", solve.pos, "Atom that must stay unifiable (repeatable)");
  solve_cmd->add_option("--neg", solve.neg, "Atom that must not unify (repeatable)");
  solve_cmd->add_option("--ground", solve.ground, "Variable to ground (repeatable)");
  solve_cmd->add_option("--depth", solve.depth, "Depth bound k");
  solve_cmd->add_flag("--no-fresh", solve.no_fresh, "Leave the fresh constant out of the signature");
  solve_cmd->add_flag("--solver-trace", solve.solver_trace, "Dump solver branches to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run);
    if (exec_cmd->parsed()) return cmd_exec(exec);
    if (cov_cmd->parsed()) return cmd_coverage(cov);
    if (solve_cmd->parsed()) return cmd_solve(solve);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownPredicate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedFeature& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kParse;
  } catch (const NonAtomicGoal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kEngine;
  }
  return kUsage;
}
