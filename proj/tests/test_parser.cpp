#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "contest/error.hpp"
#include "contest/oracles/fixtures.hpp"
#include "contest/oracles/random_gen.hpp"
#include "test_util.hpp"

namespace contest::testing {
namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Parser, Example21Program) {
  Program p = fixture("example21").program;
  ASSERT_EQ(p.size(), 7u);
  for (int i = 1; i <= 7; ++i) EXPECT_EQ(p.clauses()[i - 1].label.index, i);
  EXPECT_EQ(to_string(p.clause(ClauseLabel{3})), "p(f(X)) :- r(X).");
  const Signature& sig = p.signature();
  EXPECT_EQ(sig.constants, std::vector<std::string>({"a", "b", "c"}));
  EXPECT_EQ(sig.functors, std::vector<FunctorKey>({{"s", 1}, {"f", 1}}));
  EXPECT_EQ(sig.predicates, std::vector<PredicateKey>({{"p", 1}, {"q", 1}, {"r", 1}}));
}

TEST(Parser, NatProgram) {
  Program p = parse_program("nat(0).\nnat(s(X)) :- nat(X).");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.clauses()[0].is_fact());
  EXPECT_EQ(p.clauses()[1].body.size(), 1u);
  EXPECT_EQ(p.labels(), L({1, 2}));
}

TEST(Parser, Goals) {
  EXPECT_EQ(A("p(f(X))"), (Atom{"p", {Term::compound("f", {Term::var("X")})}}));
  EXPECT_EQ(A("q(a)"), (Atom{"q", {Term::constant("a")}}));
  EXPECT_EQ(A("q(a)."), A("q(a)"));
  EXPECT_EQ(A("go").arity(), 0u);
  EXPECT_THROW(A("p(X), q(X)"), NonAtomicGoal);
  EXPECT_THROW(A("p(X"), SyntaxError);
  EXPECT_THROW(A("X"), UnsupportedFeature);
}

TEST(Parser, RejectsImpureConstructs) {
  for (const char* src : {"p(X) :- \\+ q(X).", "p(X) :- q(X), !.", "p(X) :- X is 1 + 2.",
                          "p(X) :- X = a.", "p(X) :- call(X).", "p(X) :- X.",
                          "p(X) :- write(X).", ":- dynamic p/1.", "p(X) :- (q(X) ; r(X)).",
                          "p(\"str\").", "p(1.5)."})
    EXPECT_THROW(parse_program(src), UnsupportedFeature) << src;
}

TEST(Parser, ReportsSyntaxErrorPosition) {
  try {
    parse_program("p(a).\nq(b) :- .\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_program("p(a)"), SyntaxError);
  EXPECT_THROW(parse_program("p(a). /* open"), SyntaxError);
}

TEST(Parser, RejectsReservedFailMarker) {
  EXPECT_THROW(parse_program("'$fail'."), Error);
}

TEST(Parser, CommentsQuotesAndLists) {
  Program p = parse_program(
      "% leading comment\n"
      "len([], 0).   /* block */\n"
      "len([_|T], s(N)) :- len(T, N).\n"
      "name('hello world', [a, b | c]).\n");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(to_string(p.clauses()[2].head), "name('hello world',[a,b|c])");
  const Term& list = p.clauses()[1].head.arg(0);
  EXPECT_EQ(list.name(), ".");
  EXPECT_EQ(list.arity(), 2u);
  EXPECT_TRUE(list.arg(0).is_var());
}

TEST(Parser, AnonymousVariablesAreDistinct) {
  Program p = parse_program("p(_, _).");
  const Atom& h = p.clauses()[0].head;
  EXPECT_TRUE(h.arg(0).is_var());
  EXPECT_NE(h.arg(0), h.arg(1));
}

TEST(Parser, DuplicateClausesKeepDistinctLabels) {
  Program p = parse_program("q(a).\nq(a).\n");
  EXPECT_EQ(p.labels(), L({1, 2}));
}

TEST(Parser, RoundTripIsStable) {
  for (const auto& name : fixture_names()) {
    Program p = fixture(name).program;
    Program again = parse_program(to_string(p));
    EXPECT_EQ(to_string(again), to_string(p)) << name;
    EXPECT_EQ(again.clauses(), p.clauses()) << name;
  }
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Program p = random_program(rng);
    EXPECT_EQ(parse_program(to_string(p)).clauses(), p.clauses());
  }
}

TEST(Fixtures, FilesMatchEmbeddedSources) {
  for (const auto& name : fixture_names())
    EXPECT_EQ(read(std::string(CONTEST_FIXTURE_DIR) + "/" + name + ".pl"), fixture(name).source) << name;
}

TEST(Fixtures, Shapes) {
  EXPECT_EQ(fixture("example21").program.size(), 7u);
  EXPECT_EQ(fixture("nat").program.size(), 2u);
  EXPECT_EQ(to_string(fixture("single_fact").program), "q(a).\n");
  EXPECT_THROW(fixture("qsort"), UnknownFixture);
}

}  // namespace
}  // namespace contest::testing
