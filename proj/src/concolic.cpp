#include "contest/concolic.hpp"

#include <algorithm>

#include "contest/error.hpp"
#include "contest/unify.hpp"

namespace contest {

std::string to_string(const StepLabel& l) {
  if (!l.is_choice) return "<>";
  return "c(" + to_string(l.concrete) + "," + to_string(l.symbolic) + ")";
}

ConcolicState initial_concolic_state(const Atom& goal, NameSource& names, Atom* symbolic_root) {
  Atom root{goal.predicate, {}};
  for (std::size_t i = 0; i < goal.arity(); ++i)
    root.args.push_back(Term::var(names.fresh_program()));
  ConcolicState s;
  s.concrete_scope = std::make_shared<const VarSet>(variables(goal));
  s.symbolic_scope = std::make_shared<const VarSet>(variables(root));
  s.concrete.push(LabeledGoal{{goal}, {}, nullptr});
  s.symbolic.push(LabeledGoal{{root}, {}, nullptr});
  if (symbolic_root) *symbolic_root = root;
  return s;
}

bool aligned(const LabeledGoal& c, const LabeledGoal& s, const Atom& symbolic_root,
             const Atom& concrete_root) {
  if (c.atoms.size() != s.atoms.size()) return false;
  if ((c.clause == nullptr) != (s.clause == nullptr)) return false;
  if (c.clause && !(c.clause == s.clause || *c.clause == *s.clause)) return false;
  if (!more_general(std::span<const Atom>(s.atoms), std::span<const Atom>(c.atoms))) return false;
  return more_general(apply(s.answer, symbolic_root), apply(c.answer, concrete_root));
}

namespace {

void check_pair(const ConcolicState& s, std::size_t i, const Atom& sym_root,
                const Atom& conc_root) {
  const LabeledGoal& c = s.concrete.at(i);
  const LabeledGoal& y = s.symbolic.at(i);
  if (!aligned(c, y, sym_root, conc_root))
    throw InvariantViolation("lockstep invariant fails at stack position " + std::to_string(i) +
                             ": " + to_string(c) + " vs " + to_string(y));
}

void apply_unfold(LabeledGoal& g, const Clause& c, const VarSet& scope) {
  auto sigma = mgu(g.atoms.front(), c.head);
  if (!sigma) throw StuckState("unfold: selected atom does not unify with clause head");
  std::vector<Atom> next = contest::apply(*sigma, std::span<const Atom>(c.body));
  for (std::size_t i = 1; i < g.atoms.size(); ++i) next.push_back(apply(*sigma, g.atoms[i]));
  g.atoms = std::move(next);
  g.answer = compose(g.answer, *sigma).restricted_to(scope);
  g.clause = nullptr;
}

}  // namespace

ConcolicStepInfo concolic_step_in_place(ConcolicState& s, const Program& p, NameSource& names,
                                        const Atom& symbolic_root, const Atom& concrete_root,
                                        bool check_invariants) {
  if (s.kind != StateKind::Running || s.concrete.empty())
    throw StuckState("step on a terminal concolic state");
  if (s.concrete.size() != s.symbolic.size())
    throw InvariantViolation("concrete and symbolic stacks differ in length");
  LabeledGoal& c = s.concrete.head();
  LabeledGoal& y = s.symbolic.head();
  ConcolicStepInfo info{Rule::Success, {}, {}, {}, {}};

  if (c.is_true()) {
    if (!y.is_true()) throw InvariantViolation("concrete goal is true but symbolic goal is not");
    s.concrete_answer = c.answer;
    s.symbolic_answer = y.answer;
    s.kind = StateKind::Success;
    s.concrete.clear();
    s.symbolic.clear();
    return info;
  }
  if (c.is_failed()) {
    if (!y.is_failed()) throw InvariantViolation("concrete goal failed but symbolic did not");
    if (s.concrete.size() == 1) {
      info.rule = Rule::Failure;
      s.concrete_answer = c.answer;
      s.symbolic_answer = y.answer;
      s.kind = StateKind::Failed;
      s.concrete.clear();
      s.symbolic.clear();
      return info;
    }
    info.rule = Rule::Backtrack;
    s.concrete.pop();
    s.symbolic.pop();
    return info;
  }
  if (y.is_true() || y.is_failed())
    throw InvariantViolation("symbolic goal ended before the concrete goal");

  if (!c.clause) {
    info.concrete_atom = c.atoms.front();
    info.symbolic_atom = y.atoms.front();
    info.symbolic_answer = y.answer;
    info.label.is_choice = true;
    auto cs = clauses_for(c.atoms.front(), p, names);
    info.label.symbolic = matching_labels(y.atoms.front(), p, names);
    for (const auto& cl : cs) info.label.concrete.insert(cl->label);
    if (!std::includes(info.label.symbolic.begin(), info.label.symbolic.end(),
                       info.label.concrete.begin(), info.label.concrete.end()))
      throw InvariantViolation("concrete labels " + to_string(info.label.concrete) +
                               " not within symbolic labels " + to_string(info.label.symbolic));
    if (cs.empty()) {
      info.rule = Rule::ChoiceFail;
      c.atoms.front() = fail_atom();
      y.atoms.front() = fail_atom();
      if (check_invariants) check_pair(s, 0, symbolic_root, concrete_root);
      return info;
    }
    info.rule = Rule::Choice;
    LabeledGoal cb = std::move(c);
    LabeledGoal yb = std::move(y);
    s.concrete.pop();
    s.symbolic.pop();
    for (std::size_t i = cs.size(); i-- > 0;) {
      s.concrete.push(LabeledGoal{cb.atoms, cb.answer, cs[i]});
      s.symbolic.push(LabeledGoal{yb.atoms, yb.answer, cs[i]});
    }
    if (check_invariants)
      for (std::size_t i = 0; i < cs.size(); ++i) check_pair(s, i, symbolic_root, concrete_root);
    return info;
  }

  if (y.clause != c.clause) throw InvariantViolation("clause annotations differ");
  info.rule = Rule::Unfold;
  std::shared_ptr<const Clause> cl = c.clause;
  apply_unfold(c, *cl, *s.concrete_scope);
  try {
    apply_unfold(y, *cl, *s.symbolic_scope);
  } catch (const StuckState&) {
    throw InvariantViolation("symbolic atom does not unify with the committed clause");
  }
  if (check_invariants) check_pair(s, 0, symbolic_root, concrete_root);
  return info;
}

ConcolicRun concolic_run(const Atom& goal, const Program& p, std::size_t fuel, NameSource& names,
                         const ConcolicOptions& options) {
  if (!p.defines(goal.key()))
    throw UnknownPredicate("predicate " + to_string(goal.key()) + " is not defined");
  names.avoid(variables(goal));
  ConcolicRun run;
  ConcolicState s = initial_concolic_state(goal, names, &run.symbolic_root);
  if (options.keep_log) run.initial = s;
  while (s.kind == StateKind::Running) {
    if (run.steps >= fuel) return run;
    ConcolicStepInfo info = concolic_step_in_place(s, p, names, run.symbolic_root, goal,
                                                   options.check_invariants);
    ++run.steps;
    if (info.label.is_choice) {
      run.choices.push_back(ChoiceRecord{run.trace, info.label.concrete, info.label.symbolic,
                                         info.symbolic_atom, info.symbolic_answer});
      run.trace.push_back(info.label.concrete);
    }
    if (options.keep_log) run.log.push_back(ConcolicLogEntry{std::move(info), s});
  }
  run.outcome = s.kind == StateKind::Success ? Outcome::Success : Outcome::Failed;
  run.concrete_answer = s.concrete_answer;
  run.symbolic_answer = s.symbolic_answer;
  return run;
}

std::vector<ConcreteState> project_concrete(const ConcolicRun& run) {
  auto project = [](const ConcolicState& s) {
    ConcreteState c;
    c.kind = s.kind;
    c.stack = s.concrete;
    c.answer = s.concrete_answer;
    c.scope = s.concrete_scope;
    return c;
  };
  std::vector<ConcreteState> out;
  out.push_back(project(run.initial));
  for (const auto& e : run.log) out.push_back(project(e.after));
  return out;
}

std::string to_string(const ConcolicState& s) {
  switch (s.kind) {
    case StateKind::Success:
      return "SUCCESS(" + to_string(s.concrete_answer) + ")][SUCCESS(" +
             to_string(s.symbolic_answer) + ")";
    case StateKind::Failed:
      return "FAILED(" + to_string(s.concrete_answer) + ")][FAILED(" +
             to_string(s.symbolic_answer) + ")";
    case StateKind::Running: break;
  }
  std::string c = to_string(s.concrete);
  std::string y = to_string(s.symbolic);
  return c.substr(0, c.size() - 1) + " ][ " + y.substr(1);
}

}  // namespace contest
