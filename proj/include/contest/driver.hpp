#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "contest/concolic.hpp"
#include "contest/solver.hpp"

namespace contest {

struct TestSpec {
  Program program;
  PredicateKey entry;
  std::vector<std::size_t> input_positions;  // 1-based argument indices
  Atom initial_goal;
  std::size_t depth_bound = 2;
  std::size_t max_alternatives = 64;
  std::size_t fuel = 100000;
  std::size_t max_iterations = 100000;  // hard backstop on driver iterations
  PosNegOptions solver;
};

/// Throws InvalidSpec or UnknownPredicate when the spec is unusable.
void validate(const TestSpec& spec);

struct TestCase {
  Atom goal;
  Trace trace;
  Outcome outcome = Outcome::FuelExhausted;
  Substitution answer;
  std::optional<Trace> predicted;  // candidate trace the goal was generated for
};

struct Alternative {
  Trace partial;
  LabelSet target;
};

/// Alternative traces at one choice: every subset of the symbolic labels
/// except the one taken, by cardinality then label order. Beyond
/// max_alternatives only the empty set and singletons are offered.
std::vector<Alternative> alt_traces(const ChoiceRecord& choice, std::size_t max_alternatives);
std::vector<Alternative> alt_traces(const ConcolicRun& run, std::size_t choice_index,
                                    std::size_t max_alternatives);

struct DriverReport {
  std::vector<TestCase> test_cases;
  std::vector<Trace> traces;  // distinct, in discovery order
  std::size_t iterations = 0;
  std::size_t skipped_by_depth = 0;
  std::size_t duplicates = 0;
  std::size_t alt_cache_hits = 0;
  std::size_t fuel_exhausted = 0;
  bool backstop_hit = false;
  std::size_t backstop = 0;
  SolverStats solver_stats;
};

struct DriverHooks {
  std::function<void(const std::string&)> solver_trace;
  std::function<void(const TestCase&)> on_test_case;
};

DriverReport run_concolic_testing(const TestSpec& spec, NameSource& names,
                                  const DriverHooks& hooks = {});
DriverReport run_concolic_testing(const TestSpec& spec);

/// Number of distinct goal skeletons for the entry predicate with input
/// arguments of depth <= k (saturating).
std::size_t goal_skeleton_bound(const TestSpec& spec, const SolverSignature& sig);

struct ReplayResult {
  bool confirmed = true;
  std::size_t diverged_at = 0;
};

/// Reruns the goal and compares its trace with the predicted prefix.
ReplayResult replay_check(const Atom& goal, const Trace& predicted_prefix, const Program& p,
                          std::size_t fuel);

}  // namespace contest
