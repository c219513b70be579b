#include "contest/driver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <deque>
#include <limits>
#include <set>

#include "contest/error.hpp"
#include "contest/printer.hpp"

namespace contest {

void validate(const TestSpec& spec) {
  if (spec.initial_goal.key() != spec.entry)
    throw InvalidSpec("initial goal " + to_string(spec.initial_goal) + " is not a call to " +
                      to_string(spec.entry));
  if (!spec.program.defines(spec.entry))
    throw UnknownPredicate("predicate " + to_string(spec.entry) + " is not defined");
  std::set<std::size_t> seen;
  for (std::size_t i : spec.input_positions) {
    if (i < 1 || i > spec.entry.arity)
      throw InvalidSpec("input position " + std::to_string(i) + " is out of range for " +
                        to_string(spec.entry));
    if (!seen.insert(i).second)
      throw InvalidSpec("input position " + std::to_string(i) + " listed twice");
    if (!spec.initial_goal.args[i - 1].ground())
      throw InvalidSpec("input argument " + std::to_string(i) + " of " +
                        to_string(spec.initial_goal) + " is not ground");
  }
}

std::vector<Alternative> alt_traces(const ChoiceRecord& choice, std::size_t max_alternatives) {
  std::vector<ClauseLabel> labels(choice.matched.begin(), choice.matched.end());
  std::size_t n = labels.size();
  std::vector<Alternative> out;
  auto emit = [&](LabelSet target) {
    if (target == choice.taken) return;
    Trace partial = choice.prefix;
    partial.push_back(target);
    out.push_back(Alternative{std::move(partial), std::move(target)});
  };
  bool too_many = n >= 63 || ((std::uint64_t{1} << n) - 1) > max_alternatives;
  if (too_many) {
    emit({});
    for (ClauseLabel l : labels) emit({l});
    return out;
  }
  // subsets by cardinality, then lexicographically by label
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      LabelSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.insert(labels[i]);
      emit(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<Alternative> alt_traces(const ConcolicRun& run, std::size_t choice_index,
                                    std::size_t max_alternatives) {
  return alt_traces(run.choices.at(choice_index), max_alternatives);
}

namespace {

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

bool is_prefix(const Trace& prefix, const Trace& t) {
  return prefix.size() <= t.size() && std::equal(prefix.begin(), prefix.end(), t.begin());
}

}  // namespace

std::size_t goal_skeleton_bound(const TestSpec& spec, const SolverSignature& sig) {
  // Non-input arguments may be non-ground: count their shapes with one extra
  // placeholder constant standing for any variable.
  auto count = [&](const SolverSignature& s) {
    GroundTermTable table(s);
    std::size_t n = 0;
    for (std::size_t d = 0; d <= spec.depth_bound; ++d) {
      n += table.of_depth(d).size();
      if (n > spec.max_iterations) break;
    }
    return n;
  };
  SolverSignature with_var = sig;
  with_var.constants.push_back("$var");
  std::size_t ground = count(sig), shapes = count(with_var);
  std::set<std::size_t> inputs(spec.input_positions.begin(), spec.input_positions.end());
  std::size_t bound = 1;
  for (std::size_t i = 1; i <= spec.entry.arity; ++i)
    bound = sat_mul(bound, inputs.count(i) ? ground : shapes);
  // the initial goal may use symbols outside the signature
  return bound == std::numeric_limits<std::size_t>::max() ? bound : bound + 1;
}

DriverReport run_concolic_testing(const TestSpec& spec, NameSource& names,
                                  const DriverHooks& hooks) {
  validate(spec);
  const Program& p = spec.program;
  SolverSignature sig =
      SolverSignature::from_program(p, true, std::span<const Atom>(&spec.initial_goal, 1));
  PosNegOptions solver = spec.solver;
  if (hooks.solver_trace) solver.alg1.trace = hooks.solver_trace;

  DriverReport report;
  report.backstop = std::min(goal_skeleton_bound(spec, sig), spec.max_iterations);

  std::deque<std::pair<Atom, std::optional<Trace>>> pending;
  std::set<std::string> known{canonical_key(spec.initial_goal)};
  // nullopt: solver failed or the new goal was out of bounds.
  std::map<std::string, std::optional<Atom>> alt_cache;
  std::set<Trace> trace_set;
  pending.emplace_back(spec.initial_goal, std::nullopt);

  while (!pending.empty()) {
    if (report.iterations >= report.backstop) {
      report.backstop_hit = true;
      break;
    }
    ++report.iterations;
    auto [goal, predicted] = std::move(pending.front());
    pending.pop_front();

    ConcolicRun run = concolic_run(goal, p, spec.fuel, names);
    TestCase tc{goal, run.trace, run.outcome, run.concrete_answer, predicted};
    if (run.outcome == Outcome::FuelExhausted) ++report.fuel_exhausted;
    if (hooks.on_test_case) hooks.on_test_case(tc);
    report.test_cases.push_back(std::move(tc));
    if (trace_set.insert(run.trace).second) report.traces.push_back(run.trace);

    for (const ChoiceRecord& choice : run.choices) {
      for (const Alternative& alt : alt_traces(choice, spec.max_alternatives)) {
        bool covered = std::any_of(trace_set.begin(), trace_set.end(),
                                   [&](const Trace& t) { return is_prefix(alt.partial, t); });
        if (covered) continue;
        const Substitution& theta = choice.symbolic_answer;
        Atom root = apply(theta, run.symbolic_root);
        // Outcomes depend only on the variant class of (root, atom) and the
        // two label sets; looping runs repeat the same choice many times.
        std::array<Atom, 2> pair{root, choice.symbolic_atom};
        std::string cache_key = canonical_key(std::span<const Atom>(pair)) + "|" +
                                to_string(alt.target) + "|" + to_string(choice.matched);
        if (auto cached = alt_cache.find(cache_key); cached != alt_cache.end()) {
          ++report.alt_cache_hits;
          if (!cached->second) continue;
          if (!known.insert(canonical_key(*cached->second)).second) {
            ++report.duplicates;
            continue;
          }
          pending.emplace_back(*cached->second, alt.partial);
          continue;
        }
        VarSet g;
        for (std::size_t i : spec.input_positions) collect_variables(root.args[i - 1], g);
        if (hooks.solver_trace)
          hooks.solver_trace("alt " + to_string(alt.partial) + " for " +
                             to_string(choice.symbolic_atom));
        auto theta2 = alt_k(choice.symbolic_atom, alt.target, choice.matched, g, p, sig,
                            spec.depth_bound, names, solver, &report.solver_stats);
        if (!theta2) {
          alt_cache.emplace(cache_key, std::nullopt);
          continue;
        }
        Atom next = apply(*theta2, root);
        // Every argument is depth-bounded, or non-input arguments could grow
        // without limit; only input arguments must be ground.
        bool in_bounds =
            std::all_of(next.args.begin(), next.args.end(),
                        [&](const Term& t) { return t.depth() <= spec.depth_bound; }) &&
            std::all_of(spec.input_positions.begin(), spec.input_positions.end(),
                        [&](std::size_t i) { return next.args[i - 1].ground(); });
        if (!in_bounds) {
          alt_cache.emplace(cache_key, std::nullopt);
          ++report.skipped_by_depth;
          continue;
        }
        next = normalize_variables(next);
        alt_cache.emplace(cache_key, next);
        if (!known.insert(canonical_key(next)).second) {
          ++report.duplicates;
          continue;
        }
        pending.emplace_back(std::move(next), alt.partial);
      }
    }
  }
  return report;
}

DriverReport run_concolic_testing(const TestSpec& spec) {
  NameSource names;
  return run_concolic_testing(spec, names);
}

ReplayResult replay_check(const Atom& goal, const Trace& predicted_prefix, const Program& p,
                          std::size_t fuel) {
  NameSource names;
  ConcolicRun run = concolic_run(goal, p, fuel, names);
  for (std::size_t i = 0; i < predicted_prefix.size(); ++i)
    if (i >= run.trace.size() || run.trace[i] != predicted_prefix[i]) return {false, i};
  return {};
}

}  // namespace contest
