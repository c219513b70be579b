#include "contest/coverage.hpp"

#include <algorithm>
#include <thread>

#include "contest/error.hpp"
#include "contest/printer.hpp"

namespace contest {

namespace {

struct GoalResult {
  Outcome outcome = Outcome::FuelExhausted;
  std::map<ClauseLabel, std::size_t> counts;
  std::map<PredicateKey, std::set<LabelSet>> sites;
  std::size_t unfolds = 0;
};

GoalResult run_goal(const Program& p, const Atom& goal, std::size_t fuel, CoverageMode mode) {
  GoalResult r;
  if (!p.defines(goal.key()))
    throw UnknownPredicate("predicate " + to_string(goal.key()) + " is not defined");
  NameSource names;
  names.avoid(variables(goal));
  ConcreteState s = initial_state(goal);
  bool answered = false;
  for (std::size_t steps = 0; s.kind == StateKind::Running; ++steps) {
    if (steps >= fuel) return r;
    const LabeledGoal& head = s.stack.head();
    if (mode == CoverageMode::AllSolutions && head.is_true() && s.stack.size() > 1) {
      answered = true;
      s.stack.pop();
      continue;
    }
    std::optional<PredicateKey> selected;
    if (!head.is_true() && !head.is_failed()) selected = head.atoms.front().key();
    StepInfo info = step_in_place(s, p, names);
    if (info.rule == Rule::Unfold) {
      ++r.counts[*info.unfolded];
      ++r.unfolds;
    } else if ((info.rule == Rule::Choice || info.rule == Rule::ChoiceFail) && selected) {
      r.sites[*selected].insert(info.matched);
    }
  }
  r.outcome = s.kind == StateKind::Success || answered ? Outcome::Success : Outcome::Failed;
  return r;
}

}  // namespace

CoverageReport measure(const Program& p, std::span<const Atom> suite, std::size_t fuel,
                       unsigned threads, CoverageMode mode) {
  std::vector<GoalResult> results(suite.size());
  std::vector<std::exception_ptr> errors(suite.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < suite.size(); i += step) {
      try {
        results[i] = run_goal(p, suite[i], fuel, mode);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(suite.size())));
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CoverageReport report;
  report.mode = mode;
  for (const Clause& c : p.clauses()) report.per_clause_counts[c.label] = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (const auto& [l, n] : results[i].counts) report.per_clause_counts[l] += n;
    for (const auto& [k, sets] : results[i].sites) report.choice_sites[k].insert(sets.begin(), sets.end());
    report.total_unfolds += results[i].unfolds;
    report.per_test_outcomes.emplace_back(suite[i], results[i].outcome);
  }
  report.total = p.size();
  for (const auto& [l, n] : report.per_clause_counts) report.covered += n > 0 ? 1 : 0;
  report.clause_coverage =
      report.total == 0 ? 0.0 : static_cast<double>(report.covered) / static_cast<double>(report.total);
  return report;
}

}  // namespace contest
