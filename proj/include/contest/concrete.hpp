#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "contest/program.hpp"
#include "contest/substitution.hpp"
#include "contest/term.hpp"

namespace contest {

enum class Rule { Success, Failure, Backtrack, Choice, ChoiceFail, Unfold };
enum class Outcome { Success, Failed, FuelExhausted };

std::string to_string(Rule r);
std::string to_string(Outcome o);  // SUCCESS, FAILED, FUEL_EXHAUSTED

/// One element of a goal stack: a conjunction with its computed answer and,
/// after a choice step, the renamed clause it is committed to.
struct LabeledGoal {
  std::vector<Atom> atoms;  // empty means true
  Substitution answer;
  std::shared_ptr<const Clause> clause;

  bool is_true() const { return atoms.empty(); }
  bool is_failed() const { return !atoms.empty() && is_fail_atom(atoms.front()); }
};

/// Goal stack; index 0 is the head. Copies share elements; the head is
/// cloned before it is modified through a shared copy.
class GoalStack {
 public:
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const LabeledGoal& head() const { return *items_.back(); }
  LabeledGoal& head() {
    auto& h = items_.back();
    if (h.use_count() > 1) h = std::make_shared<LabeledGoal>(*h);
    return *h;
  }
  const LabeledGoal& at(std::size_t i) const { return *items_[items_.size() - 1 - i]; }
  void pop() { items_.pop_back(); }
  void push(LabeledGoal g) { items_.push_back(std::make_shared<LabeledGoal>(std::move(g))); }
  void clear() { items_.clear(); }

 private:
  std::vector<std::shared_ptr<LabeledGoal>> items_;  // head stored last
};

enum class StateKind { Running, Success, Failed };

struct ConcreteState {
  StateKind kind = StateKind::Running;
  GoalStack stack;
  Substitution answer;  // meaningful once terminal
  std::shared_ptr<const VarSet> scope;  // variables of the initial goal
};

ConcreteState initial_state(const Atom& goal);

/// Renamed copies of the clauses whose head unifies with a, in program order.
std::vector<std::shared_ptr<const Clause>> clauses_for(const Atom& a, const Program& p,
                                                       NameSource& names);
LabelSet matching_labels(const Atom& a, const Program& p, NameSource& names);

/// Rules whose guard holds; exactly one for any running state.
std::vector<Rule> enabled_rules(const ConcreteState& s, const Program& p);

struct StepInfo {
  Rule rule;
  LabelSet matched;                     // choice and choice_fail
  std::optional<ClauseLabel> unfolded;  // unfold
};

/// Applies the single enabled rule in place. Throws StuckState if none applies.
StepInfo step_in_place(ConcreteState& s, const Program& p, NameSource& names);

struct ConcreteStep {
  StepInfo info;
  ConcreteState next;
};
ConcreteStep concrete_step(const ConcreteState& s, const Program& p, NameSource& names);

struct StepEvent {
  StepInfo info;
  const ConcreteState& after;
};
using ConcreteObserver = std::function<void(const StepEvent&)>;

struct ConcreteRun {
  Outcome outcome = Outcome::FuelExhausted;
  Substitution answer;
  std::size_t steps = 0;
};

/// First-answer execution. Throws UnknownPredicate if the goal's predicate is
/// not defined by the program.
ConcreteRun concrete_run(const Atom& goal, const Program& p, std::size_t fuel, NameSource& names,
                         const ConcreteObserver& observer = {});

std::string to_string(const LabeledGoal& g);
std::string to_string(const GoalStack& s);
std::string to_string(const ConcreteState& s);

}  // namespace contest
