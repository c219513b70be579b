#include <gtest/gtest.h>

#include <algorithm>

#include "contest/error.hpp"
#include "contest/oracles/fixtures.hpp"
#include "contest/oracles/oracles.hpp"
#include "contest/oracles/random_gen.hpp"
#include "contest/solver.hpp"
#include "contest/unify.hpp"
#include "test_util.hpp"

namespace contest::testing {
namespace {

std::vector<std::string> result_keys(const Atom& a, const std::vector<Atom>& pos) {
  NameSource names;
  names.avoid(variables(a));
  Alg1Stats stats;
  std::vector<std::string> out;
  for (const Substitution& s : max_unify_substs(a, pos, names, {}, &stats)) {
    EXPECT_TRUE(std::ranges::all_of(s.domain(), [&](const Variable& v) { return variables(a).count(v) > 0; }));
    for (const auto& [v, t] : s) EXPECT_FALSE(v.is_universal());
    out.push_back(instance_key(a, s));
  }
  EXPECT_EQ(stats.invariant_unify_violations, 0u);
  EXPECT_EQ(stats.measure_violations, 0u);
  return out;
}

std::string key_of(const Atom& a, std::vector<std::pair<std::string, Term>> b) {
  return instance_key(a, S(std::move(b)));
}

bool contains(const std::vector<std::string>& v, const std::string& k) {
  return std::find(v.begin(), v.end(), k) != v.end();
}

TEST(MaxUnify, BranchPair) {
  Atom a = A("p(X, Y)");
  auto keys = result_keys(a, {A("p(a, b)"), A("p(Z, Z)")});
  EXPECT_EQ(keys, std::vector<std::string>({key_of(a, {{"X", T("a")}, {"Y", U("_U1")}}),
                                            key_of(a, {{"X", U("_U1")}, {"Y", T("b")}})}));
}

TEST(MaxUnify, SharedUniversal) {
  Atom a = A("p(X, Y)");
  auto keys = result_keys(a, {A("p(a, a)"), A("p(b, b)")});
  EXPECT_TRUE(contains(keys, key_of(a, {{"X", U("_U1")}, {"Y", U("_U1")}})));
}

TEST(MaxUnify, DistinctUniversals) {
  Atom a = A("p(X, Y)");
  auto keys = result_keys(a, {A("p(a, b)"), A("p(b, a)")});
  EXPECT_TRUE(contains(keys, key_of(a, {{"X", U("_U1")}, {"Y", U("_U2")}})));
}

TEST(MaxUnify, NestedUniversal) {
  Atom a = A("p(X, Y)");
  auto keys = result_keys(a, {A("p(s(a), s(c))"), A("p(s(b), s(c))"), A("p(Z, Z)")});
  EXPECT_TRUE(contains(keys, key_of(a, {{"X", Term::compound("s", {U("_U2")})}, {"Y", T("s(c)")}})));
}

TEST(MaxUnify, EmptyPositiveSetGivesIdentity) {
  NameSource names;
  auto r = max_unify_substs(A("p(X)"), {}, names);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].empty());
}

TEST(MaxUnify, ResultsUnifyWithEveryPositive) {
  for (const UnifProblem& prob : random_unif_problems(41, 150)) {
    NameSource names;
    Alg1Stats stats;
    for (const Substitution& s : max_unify_substs(prob.subject, prob.pos, names, {}, &stats)) {
      Atom inst = contest::apply(s, prob.subject);
      for (const Atom& h : prob.pos) EXPECT_TRUE(unifiable(inst, h)) << to_string(inst) << " " << to_string(h);
    }
  }
}

// Binding a head variable to another head's subterm can leave a working set
// the subject no longer unifies with. Such branches end in leaves that do not
// match the subject and are dropped, so results stay sound.
TEST(MaxUnify, WorkingSetCanLoseUnifiability) {
  Atom a = A("p(X, f(f(X)))");
  std::vector<Atom> pos{A("p(a, f(f(a)))"), A("p(b, W1)"), A("p(W2, f(W3))")};
  NameSource names;
  Alg1Stats stats;
  auto results = max_unify_substs(a, pos, names, {}, &stats);
  EXPECT_GT(stats.invariant_unify_violations, 0u);
  EXPECT_GT(stats.match_failures, 0u);
  ASSERT_FALSE(results.empty());
  for (const Substitution& s : results)
    for (const Atom& h : pos) EXPECT_TRUE(unifiable(contest::apply(s, a), h));
}

TEST(PosNeg, GroundsThroughPositive) {
  UnifProblem prob{A("p(X)"), {A("p(s(Y))")}, {A("p(s(0))")}, {V("X")}, 2};
  SolverSignature sig{{"0"}, {{"s", 1}}, std::nullopt};
  NameSource names;
  auto r = pos_neg(prob, sig, names);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, S({{"X", T("s(s(0))")}}));
  EXPECT_EQ(naive_alt_oracle(prob, sig, 2), r);
}

TEST(PosNeg, FailCase) {
  UnifProblem prob{A("p(X)"), {A("p(a)"), A("p(b)")}, {A("p(f(Z))")}, {}, 2};
  NameSource names;
  SolverSignature sig{{"a", "b"}, {{"f", 1}}, std::nullopt};
  EXPECT_FALSE(pos_neg(prob, sig, names));
  EXPECT_FALSE(naive_alt_oracle(prob, sig, 2));
}

TEST(PosNeg, NegativeOnlyUsesFreshConstant) {
  UnifProblem prob{A("nat(X)"), {}, {A("nat(0)"), A("nat(s(W))")}, {V("X")}, 1};
  SolverSignature sig = SolverSignature::from_program(fixture("nat").program);
  EXPECT_EQ(sig.fresh_constant, "c_fresh");
  NameSource names;
  auto r = pos_neg(prob, sig, names);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, S({{"X", T("c_fresh")}}));
}

TEST(PosNeg, SoundOnRandomProblems) {
  SolverSignature sig = small_signature();
  std::size_t solved = 0;
  for (const UnifProblem& prob : random_unif_problems(5, 200)) {
    NameSource names;
    auto r = pos_neg(prob, sig, names);
    if (!r) continue;
    ++solved;
    EXPECT_TRUE(satisfies_problem(prob, *r));
    std::size_t extra = 0;
    for (const auto& [v, t] : *r) extra = std::max(extra, t.depth());
    EXPECT_TRUE(naive_alt_oracle(prob, sig, prob.depth_bound + extra));
  }
  EXPECT_GT(solved, 50u);
}

TEST(AltK, NatExamples) {
  Program p = fixture("nat").program;
  NameSource names;
  VarSet g{V("X")};
  auto succ = alt_k(A("nat(X)"), L({2}), L({1, 2}), g, p, 1, names);
  ASSERT_TRUE(succ);
  EXPECT_EQ(*succ, S({{"X", T("s(0)")}}));
  auto none = alt_k(A("nat(X)"), L({}), L({1, 2}), g, p, 1, names);
  ASSERT_TRUE(none);
  EXPECT_EQ(*none, S({{"X", T("c_fresh")}}));
  EXPECT_FALSE(alt_k(A("nat(X)"), L({1, 2}), L({1, 2}), g, p, 1, names));

  UnifProblem both{A("nat(X)"), {A("nat(0)"), A("nat(s(W))")}, {}, g, 1};
  EXPECT_FALSE(naive_alt_oracle(both, SolverSignature::from_program(p), 1));
  UnifProblem only2{A("nat(X)"), {A("nat(s(W))")}, {A("nat(0)")}, g, 1};
  EXPECT_EQ(naive_alt_oracle(only2, SolverSignature::from_program(p), 1), succ);
}

TEST(AltK, RespectsDepthBound) {
  Program p = parse_program("d(s(s(X))).\n");
  NameSource names;
  VarSet g{V("X")};
  EXPECT_FALSE(alt_k(A("d(X)"), L({1}), L({1}), g, p, 1, names));
  auto r = alt_k(A("d(X)"), L({1}), L({1}), g, p, 2, names);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, S({{"X", T("s(s(c_fresh))")}}));
}

TEST(AltK, UnknownLabel) {
  Program p = fixture("nat").program;
  NameSource names;
  EXPECT_THROW(alt_k(A("nat(X)"), L({9}), L({1, 9}), {V("X")}, p, 1, names), UnknownLabel);
}

TEST(GroundingEnum, GradedOrder) {
  SolverSignature sig{{"0", "c_fresh"}, {{"s", 1}}, "c_fresh"};
  auto r = grounding_enum({V("X")}, sig, 1);
  std::vector<std::string> got;
  for (const auto& s : r) got.push_back(to_string(s));
  EXPECT_EQ(got, std::vector<std::string>({"{X/0}", "{X/c_fresh}", "{X/s(0)}", "{X/s(c_fresh)}"}));
}

TEST(GroundingEnum, EmptyVariableSet) {
  auto r = grounding_enum({}, small_signature(), 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].empty());
}

TEST(GroundingEnum, TwoVariablesByTotalDepth) {
  SolverSignature sig{{"a", "b"}, {{"f", 1}}, std::nullopt};
  std::vector<Variable> vars{V("X"), V("Y")};
  auto r = grounding_enum(vars, sig, 1);
  // 2 + 2 terms per variable: 16 combinations in total.
  ASSERT_EQ(r.size(), 16u);
  EXPECT_EQ(to_string(r[0]), "{X/a, Y/a}");
  EXPECT_EQ(to_string(r[1]), "{X/a, Y/b}");
  EXPECT_EQ(to_string(r[2]), "{X/b, Y/a}");
  EXPECT_EQ(to_string(r[4]), "{X/a, Y/f(a)}");
  std::size_t prev = 0;
  for (const auto& s : r) {
    std::size_t total = 0;
    for (const Variable& v : vars) {
      const Term* t = s.lookup(v);
      ASSERT_TRUE(t);
      EXPECT_TRUE(t->ground());
      total += t->depth();
    }
    EXPECT_GE(total, prev);
    prev = total;
  }
}

TEST(Signature, FreshConstantAvoidsProgramSymbols) {
  Program p = parse_program("q(c_fresh).\nq(f(c_fresh1)).\n");
  EXPECT_EQ(SolverSignature::from_program(p).fresh_constant, "c_fresh2");
  EXPECT_EQ(choose_fresh_constant({}), "c_fresh");
}

TEST(NaiveOracle, UnconstrainedProblemSolvedAtDepthZero) {
  UnifProblem prob{A("p(X)"), {}, {}, {}, 2};
  auto r = naive_alt_oracle(prob, small_signature(), 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(contest::apply(*r, Term::var("X")).depth(), 0u);
}

}  // namespace
}  // namespace contest::testing
