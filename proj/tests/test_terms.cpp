#include <gtest/gtest.h>

#include "contest/error.hpp"
#include "contest/oracles/oracles.hpp"
#include "contest/oracles/random_gen.hpp"
#include "contest/unify.hpp"
#include "test_util.hpp"

namespace contest::testing {
namespace {

TEST(Mgu, BindsVariableToConstant) {
  auto s = mgu(A("r(X)"), A("r(a)"));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, S({{"X", T("a")}}));
}

TEST(Mgu, IdenticalAtomsGiveIdentity) {
  auto s = mgu(A("p(X)"), A("p(X)"));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->empty());
}

TEST(Mgu, OccursCheckFails) {
  EXPECT_FALSE(mgu(A("p(Y, Y)"), A("p(X, f(X))")));
  EXPECT_FALSE(mgu(T("X"), T("f(X)")));
}

TEST(Mgu, ClashesFail) {
  EXPECT_FALSE(mgu(A("p(a)"), A("p(b)")));
  EXPECT_FALSE(mgu(A("p(a)"), A("q(a)")));
  EXPECT_FALSE(mgu(A("p(f(X))"), A("p(g(X))")));
  EXPECT_FALSE(mgu(T("f(a)"), T("f(a, b)")));
}

TEST(Mgu, ResultIsIdempotentAndUnifies) {
  Atom a = A("p(X, f(Y), Z)");
  Atom b = A("p(g(Z), W, a)");
  auto s = mgu(a, b);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->is_idempotent());
  EXPECT_EQ(contest::apply(*s, a), contest::apply(*s, b));
  EXPECT_EQ(to_string(contest::apply(*s, a)), "p(g(a),f(Y),a)");
}

TEST(Apply, Examples) {
  EXPECT_EQ(contest::apply(S({{"X", T("a")}}), A("r(X)")), A("r(a)"));
  EXPECT_EQ(contest::apply(Substitution{}, T("f(X, b)")), T("f(X, b)"));
  EXPECT_EQ(contest::apply(S({{"N", T("f(Y)")}}), A("p(N)")), A("p(f(Y))"));
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(S({{"X", T("Y")}}), S({{"Y", T("a")}})), S({{"X", T("a")}, {"Y", T("a")}}));
  EXPECT_EQ(compose({}, S({{"Y", T("a")}})), S({{"Y", T("a")}}));
  EXPECT_EQ(compose(S({{"N", T("f(Y)")}}), S({{"Y", T("a")}})),
            S({{"N", T("f(a)")}, {"Y", T("a")}}));
}

TEST(Compose, DropsTrivialBindings) {
  Substitution s = compose(S({{"X", T("Y")}}), S({{"Y", T("X")}}));
  EXPECT_EQ(s, S({{"Y", T("X")}}));
  EXPECT_TRUE(s.is_idempotent());
}

TEST(Compose, MatchesSequentialApplication) {
  Substitution a = S({{"X", T("f(Y, Z)")}, {"W", T("b")}});
  Substitution b = S({{"Y", T("g(Z)")}, {"Z", T("a")}});
  for (const char* text : {"p(X, Y, Z, W)", "q(f(X), V)", "r(a)"}) {
    Atom t = A(text);
    EXPECT_EQ(contest::apply(compose(a, b), t), contest::apply(b, contest::apply(a, t))) << text;
  }
}

TEST(Substitution, BindSkipsIdentity) {
  Substitution s;
  s.bind(V("X"), T("X"));
  EXPECT_TRUE(s.empty());
}

TEST(RenameApart, ProducesFreshVariant) {
  Program p = parse_program("p(f(X)) :- r(X).\nq(a).\n");
  NameSource names;
  Clause c1 = rename_apart(p.clauses()[0], names);
  Clause c2 = rename_apart(p.clauses()[0], names);
  EXPECT_TRUE(is_variant(c1.head, p.clauses()[0].head));
  EXPECT_EQ(to_string(c1), "p(f(_G1)) :- r(_G1).");
  VarSet v1 = variables(c1.head), v2 = variables(c2.head);
  for (const Variable& v : v1) EXPECT_FALSE(v2.count(v));
  EXPECT_EQ(rename_apart(p.clauses()[1], names), p.clauses()[1]);
}

TEST(RenameApart, AvoidsReservedLookingNames) {
  NameSource names;
  names.avoid({V("_G7"), V("X")});
  EXPECT_EQ(names.fresh_program().name, "_G8");
  EXPECT_EQ(names.fresh_universal().name, "_U1");
}

TEST(MoreGeneral, Examples) {
  EXPECT_TRUE(more_general(A("p(N)"), A("p(f(X))")));
  EXPECT_FALSE(more_general(A("p(a)"), A("p(X)")));
  EXPECT_TRUE(more_general(A("p(X)"), A("p(X)")));
  EXPECT_FALSE(more_general(A("p(X, X)"), A("p(a, b)")));
  EXPECT_TRUE(more_general(A("p(X, Y)"), A("p(Y, X)")));
  EXPECT_TRUE(is_variant(A("p(X, Y)"), A("p(Y, X)")));
  EXPECT_FALSE(is_variant(A("p(X, Y)"), A("p(X, X)")));
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth(T("X")), 0u);
  EXPECT_EQ(depth(T("s(0)")), 1u);
  EXPECT_EQ(depth(T("f(g(a), b)")), 2u);
  EXPECT_EQ(depth(T("a")), 0u);
}

TEST(Variables, Examples) {
  EXPECT_EQ(variables(A("p(f(X), a)")), VarSet({V("X")}));
  EXPECT_TRUE(is_ground(A("nat(s(0))")));
  EXPECT_FALSE(is_ground(A("nat(s(X))")));
  Substitution s = S({{"X", T("f(Y)")}});
  VarSet both = s.domain();
  for (const Variable& v : s.range_variables()) both.insert(v);
  EXPECT_EQ(both, VarSet({V("X"), V("Y")}));
}

TEST(Disagreement, OutermostPairs) {
  std::vector<Atom> atoms{Atom{"f", {T("X"), T("g(b)")}}, Atom{"f", {T("g(a)"), T("g(h(Y))")}}};
  auto pairs = disagreement_pairs(atoms);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].left, T("X"));
  EXPECT_EQ(pairs[0].right, T("g(a)"));
  EXPECT_EQ(pairs[0].position, std::vector<std::size_t>({0}));
  EXPECT_TRUE(pairs[0].simple);
  EXPECT_EQ(pairs[1].left, T("b"));
  EXPECT_EQ(pairs[1].right, T("h(Y)"));
  EXPECT_EQ(pairs[1].position, std::vector<std::size_t>({1, 0}));
  EXPECT_FALSE(pairs[1].simple);
}

TEST(Disagreement, IdenticalAtomsHaveNone) {
  std::vector<Atom> atoms{A("p(a)"), A("p(a)")};
  EXPECT_TRUE(disagreement_pairs(atoms).empty());
}

TEST(Disagreement, UniversalPairIsNeverSimple) {
  EXPECT_FALSE(is_simple_pair(U("_U1"), T("a")));
  EXPECT_FALSE(is_simple_pair(T("X"), Term::compound("f", {U("_U1")})));
  EXPECT_TRUE(is_simple_pair(T("X"), T("f(Y)")));
  EXPECT_FALSE(is_simple_pair(T("X"), T("f(X)")));
}

TEST(Disagreement, RejectsMixedPredicates) {
  std::vector<Atom> atoms{A("p(a)"), A("q(a)")};
  EXPECT_THROW(disagreement_pairs(atoms), std::invalid_argument);
}

// Properties over a small exhaustive space: every brute-force unifier is an
// instance of the mgu, and unifiability agrees with the enumeration.
TEST(MguProperty, AgreesWithBruteForce) {
  const std::vector<std::string> consts{"a", "b"};
  std::vector<Term> terms;
  for (const char* t : {"a", "X", "Y", "f(a)", "f(X)", "f(Y)", "f(f(X))", "f(f(b))"}) terms.push_back(T(t));
  for (const Term& l : terms) {
    for (const Term& r : terms) {
      Atom a{"p", {l, T("Y")}}, b{"p", {r, T("X")}};
      auto s = mgu(a, b);
      auto found = brute_unifiers(a, b, consts, {"f"}, 2);
      EXPECT_EQ(s.has_value(), !found.empty()) << to_string(a) << " " << to_string(b);
      EXPECT_EQ(s.has_value(), mgu(b, a).has_value());
      if (!s) continue;
      EXPECT_TRUE(s->is_idempotent());
      for (const Substitution& tau : found)
        EXPECT_TRUE(more_general(contest::apply(*s, a), contest::apply(tau, a)));
    }
  }
}

TEST(MguProperty, RandomTermsUnifyAndStayIdempotent) {
  Rng rng(7);
  const std::vector<std::string> consts{"a", "b"}, vars{"X", "Y", "Z"};
  for (int i = 0; i < 300; ++i) {
    Term l = random_term(rng, consts, vars, 2), r = random_term(rng, consts, vars, 2);
    auto s = mgu(l, r);
    EXPECT_EQ(s.has_value(), mgu(r, l).has_value());
    if (!s) continue;
    EXPECT_EQ(contest::apply(*s, l), contest::apply(*s, r));
    EXPECT_TRUE(s->is_idempotent());
    EXPECT_GE(depth(contest::apply(*s, l)), depth(l));
    Substitution c = compose(*s, S({{"Z", T("a")}}));
    EXPECT_TRUE(c.is_idempotent());
  }
}

}  // namespace
}  // namespace contest::testing
