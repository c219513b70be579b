#include <gtest/gtest.h>

#include "contest/oracles/fixtures.hpp"
#include "contest/report.hpp"
#include "test_util.hpp"

namespace contest::testing {
namespace {

RunSummary summary_for(const std::string& name) {
  const Fixture f = fixture(name);
  DriverReport d = run_concolic_testing(f.spec);
  std::vector<Atom> suite;
  for (const auto& tc : d.test_cases) suite.push_back(tc.goal);
  return summarize(name + ".pl", f.spec, d, measure(f.program, suite, f.spec.fuel));
}

TEST(Report, JsonRoundTripPreservesText) {
  for (const auto& name : fixture_names()) {
    RunSummary s = summary_for(name);
    auto j = to_json(s);
    RunSummary back = summary_from_json(nlohmann::ordered_json::parse(j.dump()));
    EXPECT_EQ(render_text(back), render_text(s)) << name;
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Report, JsonShape) {
  auto j = to_json(summary_for("nat"));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("goal"), "nat(0)");
  EXPECT_EQ(j.at("k"), 1);
  ASSERT_EQ(j.at("test_cases").size(), 4u);
  EXPECT_EQ(j.at("test_cases")[2].at("goal"), "nat(s(0))");
  EXPECT_EQ(j.at("test_cases")[2].at("trace"), nlohmann::ordered_json::parse(R"([["l2"],["l1"]])"));
  EXPECT_EQ(j.at("test_cases")[1].at("trace"), nlohmann::ordered_json::parse("[[]]"));
  EXPECT_EQ(j.at("coverage").at("clause_coverage"), 1.0);
}

TEST(Report, TextIsDeterministic) {
  EXPECT_EQ(render_text(summary_for("example21")), render_text(summary_for("example21")));
  std::string text = render_text(summary_for("nat"));
  EXPECT_NE(text.find("nat(s(c_fresh))"), std::string::npos);
  EXPECT_NE(text.find("({l2},{l1})"), std::string::npos);
}

TEST(Report, MalformedJsonThrows) {
  EXPECT_ANY_THROW(summary_from_json(nlohmann::ordered_json::parse(R"({"program": "x"})")));
}

TEST(Printer, Notation) {
  EXPECT_EQ(to_string(Trace({L({3}), L({6, 7})})), "({l3},{l6,l7})");
  EXPECT_EQ(to_string(Trace({L({})})), "({})");
  EXPECT_EQ(to_string(S({{"X", T("a")}, {"Y", T("f(b)")}})), "{X/a, Y/f(b)}");
  EXPECT_EQ(to_string(PredicateKey{"p", 2}), "p/2");
  EXPECT_EQ(to_string(T("[a, b | T]")), "[a,b|T]");
  EXPECT_EQ(to_string(T("'A b'")), "'A b'");
  EXPECT_EQ(canonical_key(A("p(X, Y, X)")), canonical_key(A("p(B, A, B)")));
  EXPECT_NE(canonical_key(A("p(X, Y)")), canonical_key(A("p(X, X)")));
  EXPECT_EQ(to_string(normalize_variables(A("p(Z, f(Y), Z)"))), "p(V1,f(V2),V1)");
}

}  // namespace
}  // namespace contest::testing
