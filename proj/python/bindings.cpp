#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "contest/concolic.hpp"
#include "contest/coverage.hpp"
#include "contest/driver.hpp"
#include "contest/error.hpp"
#include "contest/oracles/fixtures.hpp"
#include "contest/parser.hpp"
#include "contest/printer.hpp"
#include "contest/report.hpp"
#include "contest/solver.hpp"
#include "contest/unify.hpp"

namespace py = pybind11;
using namespace contest;

namespace {

py::dict bindings_of(const Substitution& s) {
  py::dict out;
  for (const auto& [v, t] : s) out[py::str(v.name)] = to_string(t);
  return out;
}

std::vector<std::vector<std::string>> trace_list(const Trace& t) {
  std::vector<std::vector<std::string>> out;
  for (const LabelSet& s : t) {
    auto& names = out.emplace_back();
    for (ClauseLabel l : s) names.push_back(to_string(l));
  }
  return out;
}

std::string run(const std::string& source, const std::string& goal, std::vector<std::size_t> inp,
                std::size_t depth, std::size_t max_alternatives, std::size_t fuel) {
  TestSpec spec;
  spec.program = parse_program(source);
  spec.initial_goal = parse_goal(goal);
  spec.entry = spec.initial_goal.key();
  spec.input_positions = std::move(inp);
  spec.depth_bound = depth;
  spec.max_alternatives = max_alternatives;
  spec.fuel = fuel;
  DriverReport report;
  {
    py::gil_scoped_release release;
    report = run_concolic_testing(spec);
  }
  std::vector<Atom> suite;
  for (const TestCase& tc : report.test_cases) suite.push_back(tc.goal);
  CoverageReport cov = measure(spec.program, suite, spec.fuel);
  return to_json(summarize("<python>", spec, report, cov)).dump();
}

py::dict execute(const std::string& source, const std::string& goal, std::size_t fuel) {
  Program p = parse_program(source);
  NameSource names;
  ConcolicRun r = concolic_run(parse_goal(goal), p, fuel, names);
  py::dict out;
  out["outcome"] = to_string(r.outcome);
  out["answer"] = bindings_of(r.concrete_answer);
  out["trace"] = trace_list(r.trace);
  return out;
}

py::dict coverage(const std::string& source, const std::vector<std::string>& goals, std::size_t fuel,
                  unsigned threads, bool all_solutions) {
  Program p = parse_program(source);
  std::vector<Atom> suite;
  for (const auto& g : goals) suite.push_back(parse_goal(g));
  CoverageReport r;
  {
    py::gil_scoped_release release;
    r = measure(p, suite, fuel, threads,
                all_solutions ? CoverageMode::AllSolutions : CoverageMode::FirstAnswer);
  }
  py::dict per_clause;
  for (const auto& [l, n] : r.per_clause_counts) per_clause[py::str(to_string(l))] = n;
  py::dict out;
  out["covered"] = r.covered;
  out["total"] = r.total;
  out["clause_coverage"] = r.clause_coverage;
  out["per_clause"] = per_clause;
  out["total_unfolds"] = r.total_unfolds;
  return out;
}

std::optional<py::dict> solve(const std::string& atom, const std::vector<std::string>& pos,
                              const std::vector<std::string>& neg,
                              const std::vector<std::string>& ground, std::size_t depth,
                              bool fresh) {
  UnifProblem prob;
  prob.subject = parse_goal(atom);
  for (const auto& s : pos) prob.pos.push_back(parse_goal(s));
  for (const auto& s : neg) prob.neg.push_back(parse_goal(s));
  for (const auto& g : ground) prob.ground_vars.insert(Variable{g});
  prob.depth_bound = depth;
  std::vector<Atom> all{prob.subject};
  all.insert(all.end(), prob.pos.begin(), prob.pos.end());
  all.insert(all.end(), prob.neg.begin(), prob.neg.end());
  NameSource names;
  for (const Atom& x : all) names.avoid(variables(x));
  auto r = pos_neg(prob, SolverSignature::from_atoms(all, fresh), names);
  if (!r) return std::nullopt;
  return bindings_of(*r);
}

std::optional<py::dict> unify(const std::string& a, const std::string& b) {
  auto s = mgu(parse_goal(a), parse_goal(b));
  if (!s) return std::nullopt;
  return bindings_of(*s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Concolic test generation for pure definite logic programs";

  static py::exception<Error> base(m, "ContestError", PyExc_RuntimeError);
  static py::exception<Error> parse(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      py::set_error(parse, e.what());
    } catch (const UnsupportedFeature& e) {
      py::set_error(parse, e.what());
    } catch (const NonAtomicGoal& e) {
      py::set_error(parse, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("run", &run, py::arg("source"), py::arg("goal"), py::arg("inp") = std::vector<std::size_t>{1},
        py::arg("depth") = 2, py::arg("max_alternatives") = 64, py::arg("fuel") = 100000,
        "Concolic testing; returns the JSON report as text.");
  m.def("execute", &execute, py::arg("source"), py::arg("goal"), py::arg("fuel") = 100000,
        "First answer of one goal with its trace.");
  m.def("coverage", &coverage, py::arg("source"), py::arg("goals"), py::arg("fuel") = 100000,
        py::arg("threads") = 1, py::arg("all_solutions") = false);
  m.def("solve", &solve, py::arg("atom"), py::arg("pos") = std::vector<std::string>{},
        py::arg("neg") = std::vector<std::string>{}, py::arg("ground") = std::vector<std::string>{},
        py::arg("depth") = 2, py::arg("fresh") = true,
        "Binding for atom that unifies with every pos and no neg atom, or None.");
  m.def("mgu", &unify, py::arg("a"), py::arg("b"));
  m.def("fixture_source", [](const std::string& name) { return testing::fixture(name).source; });
}
