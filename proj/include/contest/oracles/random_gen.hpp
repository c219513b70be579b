#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "contest/driver.hpp"
#include "contest/solver.hpp"

namespace contest::testing {

/// Seeded generator. Draws only from the raw engine output so sequences are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Small programs over {a,b; f/1} with predicates p/1 and q/2.
struct ProgramShape {
  std::size_t max_clauses = 5;
  std::size_t max_body = 2;
  std::size_t max_depth = 2;
  std::vector<std::string> constants{"a", "b"};
  std::vector<PredicateKey> predicates{{"p", 1}, {"q", 2}};
};

Term random_term(Rng& rng, const std::vector<std::string>& constants,
                 const std::vector<std::string>& vars, std::size_t max_depth);
Program random_program(Rng& rng, const ProgramShape& shape = {});
/// Call to a predicate defined by p, arguments of depth <= max_depth.
Atom random_goal(Rng& rng, const Program& p, const ProgramShape& shape = {});

struct RandomCase {
  Program program;
  Atom goal;
};
std::vector<RandomCase> random_cases(std::uint64_t seed, std::size_t n);

/// Problems over {a,b; f/1} with every positive and negative atom unifiable
/// with the subject and renamed apart from it.
std::vector<UnifProblem> random_unif_problems(std::uint64_t seed, std::size_t n);
SolverSignature small_signature();  // {a, b, c_fresh; f/1}

/// Driver specs with ground input arguments and k <= 2.
std::vector<TestSpec> random_specs(std::uint64_t seed, std::size_t n, std::size_t fuel);

}  // namespace contest::testing
