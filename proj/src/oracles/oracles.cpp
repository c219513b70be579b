#include "contest/oracles/oracles.hpp"

#include <algorithm>
#include <map>

#include "contest/unify.hpp"

namespace contest::testing {

namespace {

class SldSearch {
 public:
  SldSearch(const Program& p, std::size_t cap) : p_(p), cap_(cap) {}

  std::optional<Substitution> solve(const std::vector<Atom>& goals, const Substitution& sigma,
                                    std::size_t depth) {
    if (goals.empty()) return sigma;
    if (depth >= cap_) {
      hit_cap_ = true;
      return std::nullopt;
    }
    const Atom& selected = goals.front();
    for (const Clause& c : p_.clauses()) {
      if (c.head.key() != selected.key()) continue;
      Clause r = rename(c);
      auto theta = mgu(selected, r.head);
      if (!theta) continue;
      std::vector<Atom> next = r.body;
      next.insert(next.end(), goals.begin() + 1, goals.end());
      next = contest::apply(*theta, std::span<const Atom>(next));
      if (auto found = solve(next, compose(sigma, *theta), depth + 1)) return found;
      // Leftmost order: a capped branch precedes every later answer.
      if (hit_cap_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool hit_cap() const { return hit_cap_; }

 private:
  Term rename(const Term& t, std::map<std::string, Term>& m) {
    if (t.is_var()) {
      auto [it, fresh] = m.try_emplace(t.name(), t);
      if (fresh) it->second = Term::var("_S" + std::to_string(++counter_) + "_" + t.name());
      return it->second;
    }
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(rename(a, m));
    return Term::compound(t.name(), std::move(args));
  }

  Clause rename(const Clause& c) {
    std::map<std::string, Term> m;
    Clause out{c.label, {c.head.predicate, {}}, {}};
    for (const Term& t : c.head.args) out.head.args.push_back(rename(t, m));
    for (const Atom& b : c.body) {
      Atom nb{b.predicate, {}};
      for (const Term& t : b.args) nb.args.push_back(rename(t, m));
      out.body.push_back(std::move(nb));
    }
    return out;
  }

  const Program& p_;
  std::size_t cap_;
  std::size_t counter_ = 0;
  bool hit_cap_ = false;
};

// All terms over the leaves and functors with depth <= max, grouped by depth.
std::vector<std::vector<Term>> terms_by_depth(const std::vector<Term>& leaves,
                                              const std::vector<FunctorKey>& functors,
                                              std::size_t max) {
  std::vector<std::vector<Term>> out{leaves};
  for (std::size_t d = 1; d <= max; ++d) {
    std::vector<Term> below;
    for (const auto& level : out) below.insert(below.end(), level.begin(), level.end());
    std::vector<Term> level;
    for (const auto& f : functors) {
      std::vector<std::size_t> idx(f.arity, 0);
      if (below.empty()) break;
      for (;;) {
        std::vector<Term> args;
        std::size_t deepest = 0;
        for (std::size_t i : idx) {
          args.push_back(below[i]);
          deepest = std::max(deepest, below[i].depth());
        }
        if (deepest + 1 == d) level.push_back(Term::compound(f.name, std::move(args)));
        std::size_t pos = f.arity;
        while (pos > 0 && ++idx[pos - 1] == below.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace

SldAnswer brute_sld_first_answer(const Atom& goal, const Program& p, std::size_t depth_cap) {
  SldSearch search(p, depth_cap);
  auto found = search.solve({goal}, {}, 0);
  SldAnswer out;
  if (found && !search.hit_cap()) {
    out.verdict = SldVerdict::Success;
    out.answer = found->restricted_to(variables(goal));
  } else if (!found && !search.hit_cap()) {
    out.verdict = SldVerdict::Failed;
  }
  return out;
}

std::optional<Substitution> naive_alt_oracle(const UnifProblem& prob, const SolverSignature& sig,
                                             std::size_t max_depth) {
  std::vector<Variable> vars = ordered_variables(prob.subject);
  std::vector<Term> leaves;
  for (const auto& c : sig.constants) leaves.push_back(Term::constant(c));
  for (std::size_t i = 0; i < vars.size(); ++i) leaves.push_back(Term::var("_O" + std::to_string(i + 1)));
  auto levels = terms_by_depth(leaves, sig.functors, max_depth);

  auto check = [&](const Substitution& s) {
    Atom as = apply(s, prob.subject);
    for (const Atom& h : prob.pos)
      if (!mgu(as, h)) return false;
    for (const Atom& h : prob.neg)
      if (mgu(as, h)) return false;
    for (const Variable& v : prob.ground_vars)
      if (!apply(s, Term::var(v)).ground()) return false;
    return true;
  };

  if (vars.empty()) return check(Substitution{}) ? std::optional<Substitution>(Substitution{}) : std::nullopt;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    std::vector<Term> pool;
    for (std::size_t i = 0; i <= d; ++i) pool.insert(pool.end(), levels[i].begin(), levels[i].end());
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
      std::size_t deepest = 0;
      Substitution s;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        s.bind(vars[i], pool[idx[i]]);
        deepest = std::max(deepest, pool[idx[i]].depth());
      }
      if (deepest == d && check(s)) return s;
      std::size_t pos = vars.size();
      while (pos > 0 && ++idx[pos - 1] == pool.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

std::vector<Substitution> brute_unifiers(const Atom& a, const Atom& b,
                                         const std::vector<std::string>& constants,
                                         const std::vector<std::string>& unary_functors,
                                         std::size_t depth) {
  std::vector<Atom> both{a, b};
  std::vector<Variable> vars = ordered_variables(std::span<const Atom>(both));
  std::vector<Term> leaves;
  for (const auto& c : constants) leaves.push_back(Term::constant(c));
  leaves.push_back(Term::var("_Spare"));
  std::vector<FunctorKey> fs;
  for (const auto& f : unary_functors) fs.push_back({f, 1});
  std::vector<Term> pool;
  for (const auto& level : terms_by_depth(leaves, fs, depth))
    pool.insert(pool.end(), level.begin(), level.end());

  std::vector<Substitution> out;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], pool[idx[i]]);
    if (apply(s, a) == apply(s, b)) out.push_back(s);
    std::size_t pos = vars.size();
    while (pos > 0 && ++idx[pos - 1] == pool.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace contest::testing
