#include "contest/oracles/fixtures.hpp"

#include "contest/error.hpp"
#include "contest/parser.hpp"

namespace contest::testing {

namespace {

struct Entry {
  const char* name;
  const char* source;
  const char* goal;
  std::size_t k;
};

const Entry kFixtures[] = {
    {"example21",
     "% Running example: two-level choice on p/1.\n"
     "p(s(a)).\n"
     "p(s(X)) :- q(X).\n"
     "p(f(X)) :- r(X).\n"
     "q(a).\n"
     "q(b).\n"
     "r(a).\n"
     "r(c).\n",
     "p(f(a))", 2},
    {"nat",
     "% Natural numbers in successor notation.\n"
     "nat(0).\n"
     "nat(s(X)) :- nat(X).\n",
     "nat(0)", 1},
    {"single_fact", "q(a).\n", "q(a)", 2},
};

}  // namespace

Fixture fixture(const std::string& name) {
  for (const Entry& e : kFixtures) {
    if (name != e.name) continue;
    Fixture f{e.name, e.source, parse_program(e.source), {}};
    f.spec.program = f.program;
    f.spec.initial_goal = parse_goal(e.goal);
    f.spec.entry = f.spec.initial_goal.key();
    f.spec.input_positions = {1};
    f.spec.depth_bound = e.k;
    return f;
  }
  throw UnknownFixture("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const Entry& e : kFixtures) out.push_back(e.name);
  return out;
}

}  // namespace contest::testing
