#include "contest/concrete.hpp"

#include "contest/error.hpp"
#include "contest/printer.hpp"
#include "contest/unify.hpp"

namespace contest {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Success: return "success";
    case Rule::Failure: return "failure";
    case Rule::Backtrack: return "backtrack";
    case Rule::Choice: return "choice";
    case Rule::ChoiceFail: return "choice_fail";
    case Rule::Unfold: return "unfold";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Success: return "SUCCESS";
    case Outcome::Failed: return "FAILED";
    case Outcome::FuelExhausted: return "FUEL_EXHAUSTED";
  }
  return "?";
}

ConcreteState initial_state(const Atom& goal) {
  ConcreteState s;
  s.scope = std::make_shared<const VarSet>(variables(goal));
  s.stack.push(LabeledGoal{{goal}, {}, nullptr});
  return s;
}

std::vector<std::shared_ptr<const Clause>> clauses_for(const Atom& a, const Program& p,
                                                       NameSource& names) {
  std::vector<std::shared_ptr<const Clause>> out;
  for (const Clause& c : p.clauses()) {
    if (c.head.key() != a.key()) continue;
    Clause r = rename_apart(c, names);
    if (unifiable(a, r.head)) out.push_back(std::make_shared<const Clause>(std::move(r)));
  }
  return out;
}

LabelSet matching_labels(const Atom& a, const Program& p, NameSource& names) {
  LabelSet out;
  for (const auto& c : clauses_for(a, p, names)) out.insert(c->label);
  return out;
}

namespace {

bool any_clause_matches(const Atom& a, const Program& p) {
  // Private renaming so that the guard check does not consume session names.
  NameSource scratch;
  scratch.avoid(variables(a));
  return !clauses_for(a, p, scratch).empty();
}

}  // namespace

std::vector<Rule> enabled_rules(const ConcreteState& s, const Program& p) {
  std::vector<Rule> out;
  if (s.kind != StateKind::Running || s.stack.empty()) return out;
  const LabeledGoal& g = s.stack.head();
  if (g.is_true()) out.push_back(Rule::Success);
  if (g.is_failed() && s.stack.size() == 1) out.push_back(Rule::Failure);
  if (g.is_failed() && s.stack.size() > 1) out.push_back(Rule::Backtrack);
  bool open = !g.is_true() && !g.is_failed();
  if (open && !g.clause && any_clause_matches(g.atoms.front(), p)) out.push_back(Rule::Choice);
  if (open && !g.clause && !any_clause_matches(g.atoms.front(), p))
    out.push_back(Rule::ChoiceFail);
  if (open && g.clause) out.push_back(Rule::Unfold);
  return out;
}

StepInfo step_in_place(ConcreteState& s, const Program& p, NameSource& names) {
  if (s.kind != StateKind::Running || s.stack.empty())
    throw StuckState("step on a terminal state");
  LabeledGoal& g = s.stack.head();
  if (g.is_true()) {
    s.answer = g.answer;
    s.kind = StateKind::Success;
    s.stack.clear();
    return {Rule::Success, {}, std::nullopt};
  }
  if (g.is_failed()) {
    if (s.stack.size() == 1) {
      s.answer = g.answer;
      s.kind = StateKind::Failed;
      s.stack.clear();
      return {Rule::Failure, {}, std::nullopt};
    }
    s.stack.pop();
    return {Rule::Backtrack, {}, std::nullopt};
  }
  if (!g.clause) {
    auto cs = clauses_for(g.atoms.front(), p, names);
    if (cs.empty()) {
      g.atoms.front() = fail_atom();
      return {Rule::ChoiceFail, {}, std::nullopt};
    }
    LabeledGoal base = std::move(g);
    s.stack.pop();
    StepInfo info{Rule::Choice, {}, std::nullopt};
    for (std::size_t i = cs.size(); i-- > 0;) {
      info.matched.insert(cs[i]->label);
      s.stack.push(LabeledGoal{base.atoms, base.answer, cs[i]});
    }
    return info;
  }
  const Clause& c = *g.clause;
  auto sigma = mgu(g.atoms.front(), c.head);
  if (!sigma) throw StuckState("unfold: selected atom does not unify with " + to_string(c));
  std::vector<Atom> next = contest::apply(*sigma, std::span<const Atom>(c.body));
  for (std::size_t i = 1; i < g.atoms.size(); ++i) next.push_back(apply(*sigma, g.atoms[i]));
  ClauseLabel label = c.label;
  g.atoms = std::move(next);
  g.answer = compose(g.answer, *sigma).restricted_to(*s.scope);
  g.clause = nullptr;
  return {Rule::Unfold, {}, label};
}

ConcreteStep concrete_step(const ConcreteState& s, const Program& p, NameSource& names) {
  ConcreteStep out{{}, s};
  out.info = step_in_place(out.next, p, names);
  return out;
}

ConcreteRun concrete_run(const Atom& goal, const Program& p, std::size_t fuel, NameSource& names,
                         const ConcreteObserver& observer) {
  if (!p.defines(goal.key()))
    throw UnknownPredicate("predicate " + to_string(goal.key()) + " is not defined");
  names.avoid(variables(goal));
  ConcreteState s = initial_state(goal);
  ConcreteRun run;
  while (s.kind == StateKind::Running) {
    if (run.steps >= fuel) return run;
    StepInfo info = step_in_place(s, p, names);
    ++run.steps;
    if (observer) observer(StepEvent{info, s});
  }
  run.outcome = s.kind == StateKind::Success ? Outcome::Success : Outcome::Failed;
  run.answer = s.answer;
  return run;
}

std::string to_string(const LabeledGoal& g) {
  std::string out;
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (i) out += ", ";
    out += is_fail_atom(g.atoms[i]) ? "fail" : to_string(g.atoms[i]);
  }
  if (g.atoms.empty()) out = "true";
  out += "_" + to_string(g.answer);
  if (g.clause) out += "^" + to_string(g.clause->label);
  return out;
}

std::string to_string(const GoalStack& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " | ";
    out += to_string(s.at(i));
  }
  return out + ">";
}

std::string to_string(const ConcreteState& s) {
  switch (s.kind) {
    case StateKind::Success: return "SUCCESS(" + to_string(s.answer) + ")";
    case StateKind::Failed: return "FAILED(" + to_string(s.answer) + ")";
    case StateKind::Running: break;
  }
  return to_string(s.stack);
}

}  // namespace contest
