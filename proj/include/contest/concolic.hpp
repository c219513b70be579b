#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contest/concrete.hpp"
#include "contest/printer.hpp"

namespace contest {

/// Label of a choice step: clauses matching the concrete atom and clauses
/// matching the symbolic atom. Non-choice steps carry no label.
struct StepLabel {
  bool is_choice = false;
  LabelSet concrete;
  LabelSet symbolic;

  friend bool operator==(const StepLabel&, const StepLabel&) = default;
};

std::string to_string(const StepLabel& l);  // c({l3},{l1,l2,l3}) or <>

/// Concrete and symbolic goal stacks advanced in lockstep.
struct ConcolicState {
  StateKind kind = StateKind::Running;
  GoalStack concrete;
  GoalStack symbolic;
  Substitution concrete_answer;  // terminal only
  Substitution symbolic_answer;  // terminal only
  std::shared_ptr<const VarSet> concrete_scope;
  std::shared_ptr<const VarSet> symbolic_scope;
};

/// Pairs goal with main(X1..Xn) over fresh program variables.
ConcolicState initial_concolic_state(const Atom& goal, NameSource& names, Atom* symbolic_root);

struct ConcolicStepInfo {
  Rule rule;
  StepLabel label;
  Atom concrete_atom;  // selected atoms before the step (choice rules only)
  Atom symbolic_atom;
  Substitution symbolic_answer;
};

/// Applies one lockstep rule in place. When check_invariants is set, the
/// elements touched by the step are checked against the lockstep invariant.
ConcolicStepInfo concolic_step_in_place(ConcolicState& s, const Program& p, NameSource& names,
                                        const Atom& symbolic_root, const Atom& concrete_root,
                                        bool check_invariants);

/// What the driver needs from one choice step.
struct ChoiceRecord {
  Trace prefix;       // trace before this step
  LabelSet taken;     // concrete label set
  LabelSet matched;   // symbolic label set
  Atom symbolic_atom;
  Substitution symbolic_answer;
};

struct ConcolicOptions {
  bool check_invariants = true;
  bool keep_log = false;
};

struct ConcolicLogEntry {
  ConcolicStepInfo info;
  ConcolicState after;
};

struct ConcolicRun {
  Outcome outcome = Outcome::FuelExhausted;
  Substitution concrete_answer;
  Substitution symbolic_answer;
  Trace trace;
  std::vector<ChoiceRecord> choices;
  Atom symbolic_root;
  std::size_t steps = 0;
  ConcolicState initial;
  std::vector<ConcolicLogEntry> log;  // only with keep_log
};

ConcolicRun concolic_run(const Atom& goal, const Program& p, std::size_t fuel, NameSource& names,
                         const ConcolicOptions& options = {});

/// Concrete-side states of a logged run: the initial state followed by the
/// state after every step.
std::vector<ConcreteState> project_concrete(const ConcolicRun& run);

/// Lockstep invariant for one aligned pair of stack elements.
bool aligned(const LabeledGoal& concrete, const LabeledGoal& symbolic, const Atom& symbolic_root,
             const Atom& concrete_root);

std::string to_string(const ConcolicState& s);

}  // namespace contest
