#include "contest/solver.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "contest/error.hpp"
#include "contest/printer.hpp"
#include "contest/unify.hpp"

namespace contest {

namespace {

constexpr std::size_t kMaxTermsPerDepth = 2'000'000;

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) return;
  out.insert(t.name());
  for (const Term& a : t.args()) collect_symbols(a, out);
}

void note(const Term& t, SolverSignature& sig) {
  if (t.is_var()) return;
  if (t.is_constant()) {
    if (std::find(sig.constants.begin(), sig.constants.end(), t.name()) == sig.constants.end())
      sig.constants.push_back(t.name());
    return;
  }
  FunctorKey f{t.name(), t.arity()};
  if (std::find(sig.functors.begin(), sig.functors.end(), f) == sig.functors.end())
    sig.functors.push_back(f);
  for (const Term& a : t.args()) note(a, sig);
}

}  // namespace

std::string choose_fresh_constant(const std::set<std::string>& taken) {
  std::string name = "c_fresh";
  for (int n = 1; taken.count(name); ++n) name = "c_fresh" + std::to_string(n);
  return name;
}

SolverSignature SolverSignature::from_program(const Program& p, bool with_fresh,
                                              std::span<const Atom> avoid) {
  SolverSignature sig;
  sig.constants = p.signature().constants;
  sig.functors = p.signature().functors;
  if (with_fresh) {
    std::set<std::string> taken(sig.constants.begin(), sig.constants.end());
    for (const auto& f : sig.functors) taken.insert(f.name);
    for (const Atom& a : avoid)
      for (const Term& t : a.args) collect_symbols(t, taken);
    sig.fresh_constant = choose_fresh_constant(taken);
    sig.constants.push_back(*sig.fresh_constant);
  }
  return sig;
}

SolverSignature SolverSignature::from_atoms(std::span<const Atom> atoms, bool with_fresh) {
  SolverSignature sig;
  std::set<std::string> taken;
  for (const Atom& a : atoms)
    for (const Term& t : a.args) {
      note(t, sig);
      collect_symbols(t, taken);
    }
  if (with_fresh) {
    sig.fresh_constant = choose_fresh_constant(taken);
    sig.constants.push_back(*sig.fresh_constant);
  }
  return sig;
}

GroundTermTable::GroundTermTable(const SolverSignature& sig) : sig_(sig) {}

const std::vector<Term>& GroundTermTable::of_depth(std::size_t d) {
  while (by_depth_.size() <= d) {
    std::size_t cur = by_depth_.size();
    std::vector<Term> level;
    if (cur == 0) {
      for (const auto& c : sig_.constants) level.push_back(Term::constant(c));
    } else {
      std::vector<Term> below;
      for (std::size_t i = 0; i < cur; ++i)
        below.insert(below.end(), by_depth_[i].begin(), by_depth_[i].end());
      for (const auto& f : sig_.functors) {
        if (below.empty() || f.arity == 0) continue;
        std::vector<std::size_t> idx(f.arity, 0);
        for (;;) {
          bool reaches = false;
          std::vector<Term> args;
          for (std::size_t i : idx) {
            args.push_back(below[i]);
            reaches = reaches || below[i].depth() == cur - 1;
          }
          if (reaches && level.size() < kMaxTermsPerDepth)
            level.push_back(Term::compound(f.name, std::move(args)));
          std::size_t pos = f.arity;
          while (pos > 0 && ++idx[pos - 1] == below.size()) idx[--pos] = 0;
          if (pos == 0) break;
        }
      }
    }
    by_depth_.push_back(std::move(level));
  }
  return by_depth_[d];
}

GroundingEnumerator::GroundingEnumerator(std::vector<Variable> vars, const SolverSignature& sig,
                                         std::size_t k)
    : vars_(std::move(vars)), table_(sig), k_(k) {}

namespace {

void depth_vectors(std::size_t i, std::size_t m, std::size_t rest, std::size_t k,
                   std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (i + 1 == m) {
    if (rest <= k) {
      cur[i] = rest;
      out.push_back(cur);
    }
    return;
  }
  for (std::size_t d = 0; d <= std::min(rest, k); ++d) {
    cur[i] = d;
    depth_vectors(i + 1, m, rest - d, k, cur, out);
  }
}

}  // namespace

bool GroundingEnumerator::next_vector() {
  while (vpos_ >= vectors_.size()) {
    if (started_) ++total_;
    started_ = true;
    if (total_ > vars_.size() * k_) return false;
    vectors_.clear();
    vpos_ = 0;
    std::vector<std::size_t> cur(vars_.size(), 0);
    depth_vectors(0, vars_.size(), total_, k_, cur, vectors_);
  }
  depths_ = vectors_[vpos_++];
  return true;
}

bool GroundingEnumerator::advance_product() {
  std::size_t pos = idx_.size();
  while (pos > 0) {
    --pos;
    if (++idx_[pos] < table_.of_depth(depths_[pos]).size()) return true;
    idx_[pos] = 0;
  }
  return false;
}

std::optional<Substitution> GroundingEnumerator::next() {
  if (done_) return std::nullopt;
  if (vars_.empty()) {
    done_ = true;
    return Substitution{};
  }
  for (;;) {
    if (!in_vector_) {
      if (!next_vector()) {
        done_ = true;
        return std::nullopt;
      }
      bool empty = false;
      for (std::size_t d : depths_) empty = empty || table_.of_depth(d).empty();
      if (empty) continue;
      idx_.assign(vars_.size(), 0);
      in_vector_ = true;
    } else if (!advance_product()) {
      in_vector_ = false;
      continue;
    }
    Substitution s;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      s.bind(vars_[i], table_.of_depth(depths_[i])[idx_[i]]);
    return s;
  }
}

std::vector<Substitution> grounding_enum(const std::vector<Variable>& vars,
                                         const SolverSignature& sig, std::size_t k,
                                         std::size_t limit) {
  std::vector<Substitution> out;
  GroundingEnumerator e(vars, sig, k);
  while (out.size() < limit) {
    auto s = e.next();
    if (!s) break;
    out.push_back(std::move(*s));
  }
  return out;
}

namespace {

struct Candidate {
  Variable var;
  Term term;
  std::vector<std::size_t> position;
  std::size_t left_atom;
  std::size_t right_atom;
};

std::string state_key(const std::vector<Atom>& b) {
  std::string out;
  for (const Atom& a : b) out += to_string(a) + ';';
  return out;
}

std::string atoms_text(const std::vector<Atom>& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += to_string(b[i]);
  }
  return out + "}";
}

std::vector<Atom> dedupe(std::vector<Atom> b) {
  std::vector<Atom> out;
  for (Atom& a : b)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  return out;
}

std::size_t count_non_universal_vars(const std::vector<Atom>& b) {
  std::size_t n = 0;
  for (const Variable& v : variables(std::span<const Atom>(b)))
    if (!v.is_universal()) ++n;
  return n;
}

std::size_t count_simple_pairs(const std::vector<Atom>& b) {
  std::size_t n = 0;
  for (const auto& d : disagreement_pairs(b)) n += d.simple ? 1 : 0;
  return n;
}

// Simple-pair bindings X/t where no other simple pair offers X a strictly
// more specific term, ordered by position, then atom indices.
std::vector<Candidate> candidates(const std::vector<Atom>& b) {
  std::vector<Candidate> raw;
  for (const auto& d : disagreement_pairs(b)) {
    if (!d.simple) continue;
    if (d.left.is_var() && !occurs(d.left.as_variable(), d.right))
      raw.push_back({d.left.as_variable(), d.right, d.position, d.left_atom, d.right_atom});
    if (d.right.is_var() && !occurs(d.right.as_variable(), d.left))
      raw.push_back({d.right.as_variable(), d.left, d.position, d.left_atom, d.right_atom});
  }
  std::map<Variable, std::vector<Term>> offered;
  for (const auto& c : raw) offered[c.var].push_back(c.term);
  std::vector<Candidate> out;
  for (const auto& c : raw) {
    bool maximal = true;
    for (const Term& other : offered[c.var])
      if (strictly_more_general(c.term, other)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Candidate& o) {
      return o.var == c.var && o.term == c.term;
    });
    if (!dup) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    if (x.position != y.position) return x.position < y.position;
    if (x.left_atom != y.left_atom) return x.left_atom < y.left_atom;
    return x.right_atom < y.right_atom;
  });
  return out;
}

void replace_at(Term& t, std::span<const std::size_t> path, const Term& with) {
  if (path.empty()) {
    t = with;
    return;
  }
  std::vector<Term> args(t.args().begin(), t.args().end());
  replace_at(args[path[0]], path.subspan(1), with);
  t = Term::compound(t.name(), std::move(args));
}

void replace_at(Atom& a, const std::vector<std::size_t>& path, const Term& with) {
  std::span<const std::size_t> p(path);
  replace_at(a.args[p[0]], p.subspan(1), with);
}

class Alg1Search {
 public:
  Alg1Search(const Atom& a, NameSource& names, const Alg1Options& options, Alg1Stats& stats)
      : a_(a), names_(names), options_(options), stats_(stats) {}

  void explore(const std::vector<Atom>& b, std::size_t depth) {
    if (!visited_.insert(state_key(b)).second) return;
    if (++stats_.states > options_.max_states) {
      stats_.state_cap_hit = true;
      return;
    }
    check_invariants(b);
    std::vector<Candidate> cands = candidates(b);
    if (cands.empty()) {
      leaf(b, depth);
      return;
    }
    std::size_t vars_before = count_non_universal_vars(b);
    std::size_t pairs_before = count_simple_pairs(b);
    for (const Candidate& c : cands) {
      if (stats_.state_cap_hit) return;
      if (options_.trace)
        options_.trace(std::string(2 * depth, ' ') + atoms_text(b) + "  bind " + c.var.name +
                       "/" + to_string(c.term));
      Substitution s{{c.var, c.term}};
      std::vector<Atom> next = dedupe(contest::apply(s, std::span<const Atom>(b)));
      if (count_non_universal_vars(next) >= vars_before) ++stats_.measure_violations;
      if (count_simple_pairs(next) >= pairs_before) ++stats_.pair_count_increases;
      explore(next, depth + 1);
    }
  }

  std::vector<Substitution> results() && { return std::move(results_); }

 private:
  // Members of B share variables with A, so unifiability is checked against
  // renamed copies.
  void check_invariants(const std::vector<Atom>& b) {
    NameSource scratch;
    scratch.avoid(variables(a_));
    scratch.avoid(variables(std::span<const Atom>(b)));
    bool general = false;
    for (const Atom& x : b) {
      if (!unifiable(a_, rename_apart(x, scratch))) ++stats_.invariant_unify_violations;
      general = general || more_general(a_, x);
    }
    if (!general) ++stats_.invariant_general_violations;
  }

  // Generalises the remaining disagreements away with universal variables.
  void leaf(std::vector<Atom> b, std::size_t depth) {
    ++stats_.leaves;
    while (b.size() > 1) {
      std::vector<DisagreementPair> first;
      std::array<Atom, 2> two{b[0], b[1]};
      for (auto& d : disagreement_pairs(std::span<const Atom>(two.data(), 2))) first.push_back(d);
      const Term t = first.front().left;
      const Term u = first.front().right;
      Term fresh = Term::var(names_.fresh_universal());
      for (const auto& d : first) {
        if (d.left == t && d.right == u) {
          replace_at(b[0], d.position, fresh);
          replace_at(b[1], d.position, fresh);
        }
      }
      b = dedupe(std::move(b));
    }
    auto theta = match(a_, b.front());
    if (!theta) {
      ++stats_.match_failures;
      if (options_.trace)
        options_.trace(std::string(2 * depth, ' ') + "leaf " + to_string(b.front()) +
                       " does not match the subject");
      return;
    }
    std::string key = canonical_key(apply(*theta, a_));
    if (options_.trace)
      options_.trace(std::string(2 * depth, ' ') + "leaf " + to_string(b.front()) + "  theta " +
                     to_string(*theta));
    if (keys_.insert(key).second) results_.push_back(std::move(*theta));
  }

  const Atom& a_;
  NameSource& names_;
  const Alg1Options& options_;
  Alg1Stats& stats_;
  std::set<std::string> visited_;
  std::set<std::string> keys_;
  std::vector<Substitution> results_;
};

}  // namespace

std::vector<Substitution> max_unify_substs(const Atom& a, std::span<const Atom> pos,
                                           NameSource& names, const Alg1Options& options,
                                           Alg1Stats* stats) {
  Alg1Stats local;
  Alg1Stats& st = stats ? *stats : local;
  if (pos.empty()) return {Substitution{}};
  std::vector<Atom> b{a};
  b.insert(b.end(), pos.begin(), pos.end());
  Alg1Search search(a, names, options, st);
  search.explore(dedupe(std::move(b)), 0);
  std::vector<Substitution> out = std::move(search).results();
  if (out.empty()) {
    // Always valid, never maximal: every variable generalised away.
    st.fallback_used = true;
    Substitution s;
    for (const Variable& v : ordered_variables(a)) s.bind(v, Term::var(names.fresh_universal()));
    out.push_back(std::move(s));
  }
  return out;
}

void SolverStats::merge(const SolverStats& o) {
  alt_calls += o.alt_calls;
  alt_successes += o.alt_successes;
  thetas += o.thetas;
  thetas_skipped += o.thetas_skipped;
  eta_candidates += o.eta_candidates;
  positive_guard_rejections += o.positive_guard_rejections;
  depth_rejections += o.depth_rejections;
  budget_exhausted += o.budget_exhausted;
  alg1.states += o.alg1.states;
  alg1.leaves += o.alg1.leaves;
  alg1.match_failures += o.alg1.match_failures;
  alg1.invariant_unify_violations += o.alg1.invariant_unify_violations;
  alg1.invariant_general_violations += o.alg1.invariant_general_violations;
  alg1.measure_violations += o.alg1.measure_violations;
  alg1.pair_count_increases += o.alg1.pair_count_increases;
  alg1.state_cap_hit = alg1.state_cap_hit || o.alg1.state_cap_hit;
  alg1.fallback_used = alg1.fallback_used || o.alg1.fallback_used;
}

bool satisfies_problem(const UnifProblem& prob, const Substitution& s) {
  Atom as = apply(s, prob.subject);
  for (const Atom& h : prob.pos)
    if (!unifiable(as, h)) return false;
  for (const Atom& h : prob.neg)
    if (unifiable(as, h)) return false;
  for (const Variable& v : prob.ground_vars)
    if (!apply(s, Term::var(v)).ground()) return false;
  return true;
}

std::optional<Substitution> pos_neg(const UnifProblem& prob, const SolverSignature& sig,
                                    NameSource& names, const PosNegOptions& options,
                                    SolverStats* stats) {
  SolverStats local;
  SolverStats& st = stats ? *stats : local;
  VarSet subject_vars = variables(prob.subject);
  std::size_t budget = options.candidate_budget;
  for (const Substitution& theta :
       max_unify_substs(prob.subject, prob.pos, names, options.alg1, &st.alg1)) {
    ++st.thetas;
    Atom a_theta = apply(theta, prob.subject);
    VarSet a_vars = variables(a_theta);
    VarSet g_vars;
    for (const Variable& v : prob.ground_vars) collect_variables(apply(theta, Term::var(v)), g_vars);
    bool usable = std::all_of(g_vars.begin(), g_vars.end(), [&](const Variable& v) {
      return !v.is_universal() && a_vars.count(v);
    });
    if (!usable) {
      ++st.thetas_skipped;
      continue;
    }
    // First ground exactly G; failing that, every non-universal variable.
    std::vector<std::vector<Variable>> tiers{{g_vars.begin(), g_vars.end()}};
    std::vector<Variable> all_vars;
    for (const Variable& v : a_vars)
      if (!v.is_universal()) all_vars.push_back(v);
    if (all_vars != tiers.front()) tiers.push_back(all_vars);
    for (const auto& tier : tiers) {
      GroundingEnumerator etas(tier, sig, prob.depth_bound);
      while (auto eta = etas.next()) {
        if (budget == 0) {
          ++st.budget_exhausted;
          return std::nullopt;
        }
        --budget;
        ++st.eta_candidates;
        Substitution sigma = compose(theta, *eta);
        Atom a_sigma = apply(sigma, prob.subject);
        bool ok = true;
        for (const Atom& h : prob.neg)
          if (unifiable(a_sigma, h)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        bool pos_ok = std::all_of(prob.pos.begin(), prob.pos.end(),
                                  [&](const Atom& h) { return unifiable(a_sigma, h); });
        if (!pos_ok) {
          ++st.positive_guard_rejections;
          continue;
        }
        return sigma.restricted_to(subject_vars);
      }
    }
  }
  return std::nullopt;
}

std::optional<Substitution> alt_k(const Atom& a, const LabelSet& l_target, const LabelSet& l_all,
                                  const VarSet& g, const Program& p, const SolverSignature& sig,
                                  std::size_t k, NameSource& names, const PosNegOptions& options,
                                  SolverStats* stats) {
  SolverStats local;
  SolverStats& st = stats ? *stats : local;
  ++st.alt_calls;
  for (ClauseLabel l : l_all) p.clause(l);
  for (ClauseLabel l : l_target) {
    p.clause(l);
    if (!l_all.count(l))
      throw UnknownLabel("target label " + to_string(l) + " is not among the matched labels");
  }
  names.avoid(variables(a));
  UnifProblem prob{a, {}, {}, g, k};
  for (ClauseLabel l : l_all) {
    Atom head = rename_apart(p.clause(l).head, names);
    if (l_target.count(l)) {
      if (!unifiable(a, head)) return std::nullopt;
      prob.pos.push_back(std::move(head));
    } else {
      prob.neg.push_back(std::move(head));
    }
  }
  auto result = pos_neg(prob, sig, names, options, &st);
  if (!result) return std::nullopt;
  for (const auto& [v, t] : *result)
    if (t.depth() > k) {
      ++st.depth_rejections;
      return std::nullopt;
    }
  ++st.alt_successes;
  return result;
}

std::optional<Substitution> alt_k(const Atom& a, const LabelSet& l_target, const LabelSet& l_all,
                                  const VarSet& g, const Program& p, std::size_t k,
                                  NameSource& names) {
  SolverSignature sig = SolverSignature::from_program(p, true, std::span<const Atom>(&a, 1));
  return alt_k(a, l_target, l_all, g, p, sig, k, names);
}

}  // namespace contest
