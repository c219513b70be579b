#include <gtest/gtest.h>

#include <algorithm>

#include "contest/concolic.hpp"
#include "contest/error.hpp"
#include "contest/oracles/fixtures.hpp"
#include "contest/oracles/random_gen.hpp"
#include "contest/unify.hpp"
#include "test_util.hpp"

namespace contest::testing {
namespace {

ConcolicRun run_logged(const Atom& goal, const Program& p, std::size_t fuel = 1000) {
  NameSource names;
  ConcolicOptions opts;
  opts.keep_log = true;
  return concolic_run(goal, p, fuel, names, opts);
}

TEST(Concolic, Example31Run) {
  Program p = fixture("example21").program;
  ConcolicRun run = run_logged(A("p(f(X))"), p);
  EXPECT_EQ(run.outcome, Outcome::Success);
  EXPECT_EQ(run.trace, Trace({L({3}), L({6, 7})}));
  EXPECT_EQ(to_string(run.trace), "({l3},{l6,l7})");
  EXPECT_EQ(run.concrete_answer, S({{"X", T("a")}}));
  ASSERT_EQ(run.symbolic_root.arity(), 1u);
  Substitution expected;
  expected.bind(run.symbolic_root.arg(0).as_variable(), T("f(a)"));
  EXPECT_EQ(run.symbolic_answer, expected);

  ASSERT_EQ(run.log.size(), 5u);
  EXPECT_EQ(run.log[0].info.label, (StepLabel{true, L({3}), L({1, 2, 3})}));
  EXPECT_EQ(to_string(run.log[0].info.label), "c({l3},{l1,l2,l3})");
  EXPECT_FALSE(run.log[1].info.label.is_choice);
  EXPECT_EQ(to_string(run.log[1].info.label), "<>");
  EXPECT_EQ(run.log[2].info.label, (StepLabel{true, L({6, 7}), L({6, 7})}));
}

TEST(Concolic, ChoiceRecordsCaptureSymbolicAtom) {
  Program p = fixture("example21").program;
  NameSource names;
  ConcolicRun run = concolic_run(A("p(f(X))"), p, 1000, names);
  ASSERT_EQ(run.choices.size(), 2u);
  const ChoiceRecord& first = run.choices[0];
  EXPECT_TRUE(first.prefix.empty());
  EXPECT_EQ(first.taken, L({3}));
  EXPECT_EQ(first.matched, L({1, 2, 3}));
  EXPECT_EQ(first.symbolic_atom, run.symbolic_root);
  EXPECT_TRUE(first.symbolic_answer.empty());
  const ChoiceRecord& second = run.choices[1];
  EXPECT_EQ(second.prefix, Trace({L({3})}));
  EXPECT_EQ(second.symbolic_atom.predicate, "r");
  ASSERT_TRUE(second.symbolic_atom.arg(0).is_var());
  EXPECT_EQ(contest::apply(second.symbolic_answer, run.symbolic_root),
            (Atom{"p", {Term::compound("f", {second.symbolic_atom.arg(0)})}}));
}

TEST(Concolic, NatTraces) {
  Program p = fixture("nat").program;
  NameSource names;
  EXPECT_EQ(concolic_run(A("nat(0)"), p, 1000, names).trace, Trace({L({1})}));
  ConcolicRun fresh = concolic_run(A("nat(c_fresh)"), p, 1000, names);
  EXPECT_EQ(fresh.trace, Trace({L({})}));
  EXPECT_EQ(fresh.outcome, Outcome::Failed);
  EXPECT_EQ(concolic_run(A("nat(s(0))"), p, 1000, names).trace, Trace({L({2}), L({1})}));
  EXPECT_EQ(concolic_run(A("nat(s(c_fresh))"), p, 1000, names).trace, Trace({L({2}), L({})}));
}

TEST(Concolic, UnknownPredicate) {
  NameSource names;
  EXPECT_THROW(concolic_run(A("zz(a)"), fixture("nat").program, 10, names), UnknownPredicate);
}

TEST(Concolic, ProjectionMatchesExample21) {
  Program p = fixture("example21").program;
  ConcolicRun run = run_logged(A("p(f(X))"), p);
  auto states = project_concrete(run);
  NameSource names;
  std::vector<std::string> expected{to_string(initial_state(A("p(f(X))")))};
  concrete_run(A("p(f(X))"), p, 1000, names,
               [&](const StepEvent& e) { expected.push_back(to_string(e.after)); });
  ASSERT_EQ(states.size(), expected.size());
  for (std::size_t i = 0; i < states.size(); ++i) EXPECT_EQ(to_string(states[i]), expected[i]);
}

// Re-checks the lockstep invariant on every stack element of every logged state.
void check_full_invariant(const ConcolicRun& run, const Atom& goal) {
  auto check = [&](const ConcolicState& s) {
    if (s.kind != StateKind::Running) {
      EXPECT_TRUE(more_general(contest::apply(s.symbolic_answer, run.symbolic_root),
                               contest::apply(s.concrete_answer, goal)));
      return;
    }
    ASSERT_EQ(s.concrete.size(), s.symbolic.size());
    for (std::size_t i = 0; i < s.concrete.size(); ++i)
      EXPECT_TRUE(aligned(s.concrete.at(i), s.symbolic.at(i), run.symbolic_root, goal));
  };
  check(run.initial);
  for (const auto& e : run.log) {
    check(e.after);
    if (e.info.label.is_choice)
      for (ClauseLabel l : e.info.label.concrete) EXPECT_TRUE(e.info.label.symbolic.count(l));
  }
}

TEST(ConcolicProperty, InvariantAndConservativity) {
  for (const auto& c : random_cases(101, 120)) {
    ConcolicRun run = run_logged(c.goal, c.program, 300);
    check_full_invariant(run, c.goal);
    std::size_t choices = 0;
    for (const auto& e : run.log) choices += e.info.label.is_choice;
    EXPECT_EQ(run.trace.size(), choices);
    // A failed run ends with choice_fail. A successful one may too, when it
    // backtracked into a pending alternative, but it unfolded something.
    if (run.outcome == Outcome::Failed) {
      ASSERT_FALSE(run.trace.empty());
      EXPECT_TRUE(run.trace.back().empty());
    }
    if (run.outcome == Outcome::Success)
      EXPECT_TRUE(std::ranges::any_of(run.trace, [](const LabelSet& s) { return !s.empty(); }));
    NameSource names;
    ConcreteRun plain = concrete_run(c.goal, c.program, 300, names);
    EXPECT_EQ(plain.outcome, run.outcome) << to_string(c.goal);
    EXPECT_EQ(canonical_key(contest::apply(plain.answer, c.goal)),
              canonical_key(contest::apply(run.concrete_answer, c.goal)));
    auto states = project_concrete(run);
    EXPECT_EQ(states.size(), plain.steps + 1);
  }
}

}  // namespace
}  // namespace contest::testing
