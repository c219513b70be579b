#include <gtest/gtest.h>

#include <algorithm>

#include "contest/concolic.hpp"
#include "contest/coverage.hpp"
#include "contest/driver.hpp"
#include "contest/oracles/fixtures.hpp"
#include "contest/oracles/random_gen.hpp"
#include "test_util.hpp"

namespace contest::testing {
namespace {

std::vector<Atom> nat_suite() {
  return {A("nat(0)"), A("nat(c_fresh)"), A("nat(s(0))"), A("nat(s(c_fresh))")};
}

TEST(Coverage, NatSuite) {
  CoverageReport r = measure(fixture("nat").program, nat_suite(), 1000);
  EXPECT_DOUBLE_EQ(r.clause_coverage, 1.0);
  EXPECT_EQ(r.covered, 2u);
  // Unfolds: nat(0) uses l1; nat(s(0)) uses l2 then l1; nat(s(c_fresh)) uses l2.
  EXPECT_EQ(r.per_clause_counts.at(ClauseLabel{1}), 2u);
  EXPECT_EQ(r.per_clause_counts.at(ClauseLabel{2}), 2u);
  EXPECT_EQ(r.total_unfolds, 4u);
  const auto& sites = r.choice_sites.at(PredicateKey{"nat", 1});
  for (const LabelSet& s : {L({1}), L({}), L({2})}) EXPECT_TRUE(sites.count(s));
  ASSERT_EQ(r.per_test_outcomes.size(), 4u);
  EXPECT_EQ(r.per_test_outcomes[1].second, Outcome::Failed);
}

TEST(Coverage, EmptySuite) {
  CoverageReport r = measure(fixture("nat").program, {}, 1000);
  EXPECT_DOUBLE_EQ(r.clause_coverage, 0.0);
  EXPECT_EQ(r.total_unfolds, 0u);
  for (const auto& [l, n] : r.per_clause_counts) EXPECT_EQ(n, 0u);
  EXPECT_TRUE(r.choice_sites.empty());
}

TEST(Coverage, Example21DriverOutput) {
  const Fixture f = fixture("example21");
  DriverReport d = run_concolic_testing(f.spec);
  std::vector<Atom> suite;
  for (const auto& tc : d.test_cases) suite.push_back(tc.goal);
  CoverageReport first = measure(f.program, suite, 1000);
  // q(a) is only reachable after p(s(a)) already succeeded through l1.
  EXPECT_EQ(first.per_clause_counts.at(ClauseLabel{4}), 0u);
  EXPECT_EQ(first.covered, 6u);
  CoverageReport all = measure(f.program, suite, 1000, 1, CoverageMode::AllSolutions);
  EXPECT_DOUBLE_EQ(all.clause_coverage, 1.0);
}

TEST(Coverage, AllSolutionsCountsEveryBranch) {
  Program p = parse_program("c(a).\nc(b).\n");
  CoverageReport first = measure(p, std::vector<Atom>{A("c(X)")}, 100);
  CoverageReport all = measure(p, std::vector<Atom>{A("c(X)")}, 100, 1, CoverageMode::AllSolutions);
  EXPECT_EQ(first.covered, 1u);
  EXPECT_EQ(all.covered, 2u);
  EXPECT_EQ(all.per_test_outcomes[0].second, Outcome::Success);
}

TEST(CoverageProperty, CountsAreOrderInsensitiveAndThreadSafe) {
  for (const auto& c : random_cases(9, 40)) {
    Rng rng(c.program.size());
    std::vector<Atom> suite{c.goal};
    for (int i = 0; i < 5; ++i) suite.push_back(random_goal(rng, c.program));
    CoverageReport base = measure(c.program, suite, 300);
    std::vector<Atom> rev(suite.rbegin(), suite.rend());
    CoverageReport r = measure(c.program, rev, 300, 4);
    EXPECT_EQ(base.per_clause_counts, r.per_clause_counts);
    EXPECT_EQ(base.choice_sites, r.choice_sites);
    std::size_t sum = 0;
    for (const auto& [l, n] : base.per_clause_counts) sum += n;
    EXPECT_EQ(sum, base.total_unfolds);
  }
}

TEST(CoverageProperty, ChoiceSitesMatchConcolicLabels) {
  for (const auto& c : random_cases(13, 60)) {
    CoverageReport r = measure(c.program, std::vector<Atom>{c.goal}, 300);
    NameSource names;
    ConcolicRun run = concolic_run(c.goal, c.program, 300, names);
    std::map<PredicateKey, std::set<LabelSet>> expected;
    for (const ChoiceRecord& ch : run.choices) expected[ch.symbolic_atom.key()].insert(ch.taken);
    EXPECT_EQ(r.choice_sites, expected) << to_string(c.goal);
  }
}

}  // namespace
}  // namespace contest::testing
