#include "contest/oracles/random_gen.hpp"

#include "contest/unify.hpp"

namespace contest::testing {

Term random_term(Rng& rng, const std::vector<std::string>& constants,
                 const std::vector<std::string>& vars, std::size_t max_depth) {
  std::size_t leaves = constants.size() + vars.size();
  if (max_depth > 0 && rng.chance(1, 3)) return Term::compound("f", {random_term(rng, constants, vars, max_depth - 1)});
  std::size_t i = rng.below(leaves);
  if (i < constants.size()) return Term::constant(constants[i]);
  return Term::var(vars[i - constants.size()]);
}

namespace {

Atom random_atom(Rng& rng, const PredicateKey& k, const std::vector<std::string>& constants,
                 const std::vector<std::string>& vars, std::size_t max_depth) {
  Atom a{k.name, {}};
  for (std::size_t i = 0; i < k.arity; ++i) a.args.push_back(random_term(rng, constants, vars, max_depth));
  return a;
}

}  // namespace

Program random_program(Rng& rng, const ProgramShape& shape) {
  static const std::vector<std::string> vars{"X", "Y", "Z"};
  std::size_t n = 1 + rng.below(shape.max_clauses);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < n; ++i) {
    const PredicateKey& hk = shape.predicates[rng.below(shape.predicates.size())];
    Clause c{{}, random_atom(rng, hk, shape.constants, vars, shape.max_depth), {}};
    std::size_t body = rng.below(shape.max_body + 1);
    for (std::size_t j = 0; j < body; ++j) {
      const PredicateKey& bk = shape.predicates[rng.below(shape.predicates.size())];
      c.body.push_back(random_atom(rng, bk, shape.constants, vars, 1));
    }
    clauses.push_back(std::move(c));
  }
  return Program(std::move(clauses));
}

Atom random_goal(Rng& rng, const Program& p, const ProgramShape& shape) {
  static const std::vector<std::string> vars{"A", "B"};
  std::vector<PredicateKey> defined;
  for (const auto& k : shape.predicates)
    if (p.defines(k)) defined.push_back(k);
  return random_atom(rng, defined[rng.below(defined.size())], shape.constants, vars,
                     shape.max_depth);
}

std::vector<RandomCase> random_cases(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::vector<RandomCase> out;
  while (out.size() < n) {
    Program p = random_program(rng);
    Atom g = random_goal(rng, p);
    out.push_back({std::move(p), std::move(g)});
  }
  return out;
}

SolverSignature small_signature() {
  SolverSignature sig;
  sig.constants = {"a", "b", "c_fresh"};
  sig.functors = {{"f", 1}};
  sig.fresh_constant = "c_fresh";
  return sig;
}

std::vector<UnifProblem> random_unif_problems(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  const std::vector<std::string> consts{"a", "b"};
  std::vector<UnifProblem> out;
  std::size_t fresh = 0;
  while (out.size() < n) {
    UnifProblem prob;
    prob.subject = Atom{"p", {random_term(rng, consts, {"X", "Y"}, 2), random_term(rng, consts, {"X", "Y"}, 2)}};
    prob.depth_bound = 1 + rng.below(2);
    auto head = [&] {
      std::string w1 = "W" + std::to_string(++fresh);
      std::string w2 = "W" + std::to_string(++fresh);
      return Atom{"p", {random_term(rng, consts, {w1, w2}, 2), random_term(rng, consts, {w1, w2}, 2)}};
    };
    std::size_t npos = rng.below(4);
    std::size_t nneg = rng.below(4);
    for (std::size_t tries = 0; prob.pos.size() < npos && tries < 20; ++tries) {
      Atom h = head();
      if (unifiable(prob.subject, h)) prob.pos.push_back(std::move(h));
    }
    for (std::size_t tries = 0; prob.neg.size() < nneg && tries < 20; ++tries) {
      Atom h = head();
      if (unifiable(prob.subject, h)) prob.neg.push_back(std::move(h));
    }
    for (const Variable& v : variables(prob.subject))
      if (rng.chance(2, 3)) prob.ground_vars.insert(v);
    out.push_back(std::move(prob));
  }
  return out;
}

std::vector<TestSpec> random_specs(std::uint64_t seed, std::size_t n, std::size_t fuel) {
  Rng rng(seed);
  ProgramShape shape;
  std::vector<TestSpec> out;
  while (out.size() < n) {
    TestSpec spec;
    spec.program = random_program(rng, shape);
    spec.depth_bound = rng.below(3);
    spec.fuel = fuel;
    Atom goal = random_goal(rng, spec.program, shape);
    spec.entry = goal.key();
    for (std::size_t i = 1; i <= goal.arity(); ++i)
      if (rng.chance(2, 3)) spec.input_positions.push_back(i);
    for (std::size_t i : spec.input_positions)
      goal.args[i - 1] = random_term(rng, shape.constants, {}, spec.depth_bound);
    spec.initial_goal = std::move(goal);
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace contest::testing
