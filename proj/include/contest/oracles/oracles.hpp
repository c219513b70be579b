#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contest/program.hpp"
#include "contest/solver.hpp"

namespace contest::testing {

enum class SldVerdict { Success, Failed, Unknown };

struct SldAnswer {
  SldVerdict verdict = SldVerdict::Unknown;
  Substitution answer;  // restricted to the goal's variables
};

/// Plain recursive SLD search, leftmost atom, clauses in order, first answer.
/// Unknown when a branch reaching depth_cap could precede the first answer.
SldAnswer brute_sld_first_answer(const Atom& goal, const Program& p, std::size_t depth_cap);

/// Tries every binding of the subject's variables to terms over sig (plus
/// as many spare variables as the subject has) of depth 0, 1, ..., max_depth
/// and checks the problem conditions directly.
std::optional<Substitution> naive_alt_oracle(const UnifProblem& prob, const SolverSignature& sig,
                                             std::size_t max_depth);

/// Unifiers of a and b found by enumerating bindings of their variables to
/// terms over constants, unary functors and one spare variable, up to depth.
std::vector<Substitution> brute_unifiers(const Atom& a, const Atom& b,
                                         const std::vector<std::string>& constants,
                                         const std::vector<std::string>& unary_functors,
                                         std::size_t depth);

}  // namespace contest::testing
