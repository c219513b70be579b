#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "contest/program.hpp"
#include "contest/substitution.hpp"
#include "contest/term.hpp"

namespace contest {

/// Ground terms available to the solver. The fresh constant, when present,
/// is the last constant and does not occur in the program.
struct SolverSignature {
  std::vector<std::string> constants;
  std::vector<FunctorKey> functors;
  std::optional<std::string> fresh_constant;

  /// Program constants and functors in program order, plus a fresh constant
  /// that also avoids the symbols of `avoid`.
  static SolverSignature from_program(const Program& p, bool with_fresh = true,
                                      std::span<const Atom> avoid = {});
  static SolverSignature from_atoms(std::span<const Atom> atoms, bool with_fresh = true);
};

/// "c_fresh", or "c_fresh<n>" for the smallest n that is not taken.
std::string choose_fresh_constant(const std::set<std::string>& taken);

/// Ground terms of exactly the given depth, in signature order.
class GroundTermTable {
 public:
  explicit GroundTermTable(const SolverSignature& sig);
  const std::vector<Term>& of_depth(std::size_t d);

 private:
  SolverSignature sig_;
  std::vector<std::vector<Term>> by_depth_;
};

/// Lazily enumerates substitutions binding every variable of vars to a ground
/// term of depth <= k: total depth ascending, then depth vector
/// lexicographically, then signature order with the first variable slowest.
class GroundingEnumerator {
 public:
  GroundingEnumerator(std::vector<Variable> vars, const SolverSignature& sig, std::size_t k);
  std::optional<Substitution> next();

 private:
  bool next_vector();
  bool advance_product();

  std::vector<Variable> vars_;
  GroundTermTable table_;
  std::size_t k_;
  std::size_t total_ = 0;
  std::vector<std::vector<std::size_t>> vectors_;  // depth vectors for total_
  std::size_t vpos_ = 0;
  std::vector<std::size_t> depths_;
  std::vector<std::size_t> idx_;
  bool started_ = false;
  bool in_vector_ = false;
  bool done_ = false;
};

std::vector<Substitution> grounding_enum(const std::vector<Variable>& vars,
                                         const SolverSignature& sig, std::size_t k,
                                         std::size_t limit = static_cast<std::size_t>(-1));

struct Alg1Stats {
  std::size_t states = 0;
  std::size_t leaves = 0;
  std::size_t match_failures = 0;
  std::size_t invariant_unify_violations = 0;
  std::size_t invariant_general_violations = 0;
  std::size_t measure_violations = 0;
  std::size_t pair_count_increases = 0;
  bool state_cap_hit = false;
  bool fallback_used = false;
};

struct Alg1Options {
  std::size_t max_states = 20000;
  std::function<void(const std::string&)> trace;  // one line per event
};

/// Maximal unifying substitutions of a with respect to pos, over every
/// branch of the nondeterministic simplification, in depth-first order and
/// without duplicates modulo renaming of universal variables.
std::vector<Substitution> max_unify_substs(const Atom& a, std::span<const Atom> pos,
                                           NameSource& names, const Alg1Options& options = {},
                                           Alg1Stats* stats = nullptr);

struct SolverStats {
  std::size_t alt_calls = 0;
  std::size_t alt_successes = 0;
  std::size_t thetas = 0;
  std::size_t thetas_skipped = 0;
  std::size_t eta_candidates = 0;
  std::size_t positive_guard_rejections = 0;
  std::size_t depth_rejections = 0;
  std::size_t budget_exhausted = 0;
  Alg1Stats alg1;

  void merge(const SolverStats& o);
};

struct PosNegOptions {
  std::size_t candidate_budget = 200000;
  Alg1Options alg1;
};

struct UnifProblem {
  Atom subject;
  std::vector<Atom> pos;
  std::vector<Atom> neg;
  VarSet ground_vars;
  std::size_t depth_bound = 2;
};

/// A substitution s over the subject's variables such that the subject under
/// s unifies with every positive atom, with no negative atom, and grounds the
/// ground_vars; nullopt when none is found within the depth bound.
std::optional<Substitution> pos_neg(const UnifProblem& prob, const SolverSignature& sig,
                                    NameSource& names, const PosNegOptions& options = {},
                                    SolverStats* stats = nullptr);

/// Input for the goal a that matches exactly the clauses l_target among l_all.
std::optional<Substitution> alt_k(const Atom& a, const LabelSet& l_target, const LabelSet& l_all,
                                  const VarSet& g, const Program& p, const SolverSignature& sig,
                                  std::size_t k, NameSource& names,
                                  const PosNegOptions& options = {}, SolverStats* stats = nullptr);

std::optional<Substitution> alt_k(const Atom& a, const LabelSet& l_target, const LabelSet& l_all,
                                  const VarSet& g, const Program& p, std::size_t k,
                                  NameSource& names);

/// The three literal conditions on a candidate solution.
bool satisfies_problem(const UnifProblem& prob, const Substitution& s);

}  // namespace contest
