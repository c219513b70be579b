#include "contest/unify.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace contest {

namespace {

// Binds v to t (t already has the current solution applied).
bool extend(Substitution& sol, const Variable& v, const Term& t) {
  if (occurs(v, t)) return false;
  sol = compose(sol, Substitution{{v, t}});
  return true;
}

std::optional<Substitution> solve(std::vector<std::pair<Term, Term>> stack) {
  Substitution sol;
  while (!stack.empty()) {
    auto [s0, t0] = std::move(stack.back());
    stack.pop_back();
    Term s = apply(sol, s0);
    Term t = apply(sol, t0);
    if (s == t) continue;
    if (t.is_var()) {
      if (!extend(sol, t.as_variable(), s)) return std::nullopt;
    } else if (s.is_var()) {
      if (!extend(sol, s.as_variable(), t)) return std::nullopt;
    } else {
      if (s.name() != t.name() || s.arity() != t.arity()) return std::nullopt;
      for (std::size_t i = s.arity(); i-- > 0;) stack.emplace_back(s.arg(i), t.arg(i));
    }
  }
  return sol;
}

}  // namespace

std::optional<Substitution> mgu(const Term& a, const Term& b) { return solve({{a, b}}); }

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
  if (a.key() != b.key()) return std::nullopt;
  std::vector<std::pair<Term, Term>> stack;
  for (std::size_t i = a.args.size(); i-- > 0;) stack.emplace_back(a.args[i], b.args[i]);
  return solve(std::move(stack));
}

bool unifiable(const Atom& a, const Atom& b) { return mgu(a, b).has_value(); }

// Identity bindings are dropped by Substitution::bind, so matching keeps its
// own map to check repeated pattern variables.
std::optional<Substitution> match(std::span<const Atom> pattern, std::span<const Atom> target) {
  if (pattern.size() != target.size()) return std::nullopt;
  std::map<Variable, Term> seen;
  Substitution out;
  struct Walker {
    std::map<Variable, Term>& seen;
    bool run(const Term& p, const Term& t) {
      if (p.is_var()) {
        auto [it, inserted] = seen.try_emplace(p.as_variable(), t);
        return inserted || it->second == t;
      }
      if (p.ground()) return p == t;
      if (t.is_var() || p.name() != t.name() || p.arity() != t.arity()) return false;
      for (std::size_t i = 0; i < p.arity(); ++i)
        if (!run(p.arg(i), t.arg(i))) return false;
      return true;
    }
  } w{seen};
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i].key() != target[i].key()) return std::nullopt;
    for (std::size_t j = 0; j < pattern[i].args.size(); ++j)
      if (!w.run(pattern[i].args[j], target[i].args[j])) return std::nullopt;
  }
  for (const auto& [v, t] : seen) out.bind(v, t);
  return out;
}

std::optional<Substitution> match(const Atom& pattern, const Atom& target) {
  return match(std::span<const Atom>(&pattern, 1), std::span<const Atom>(&target, 1));
}

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  Atom p{"$m", {pattern}};
  Atom t{"$m", {target}};
  return match(p, t);
}

bool more_general(const Term& a, const Term& b) { return match(a, b).has_value(); }
bool more_general(const Atom& a, const Atom& b) { return match(a, b).has_value(); }
bool more_general(std::span<const Atom> a, std::span<const Atom> b) {
  return match(a, b).has_value();
}

bool is_variant(const Atom& a, const Atom& b) { return more_general(a, b) && more_general(b, a); }

bool strictly_more_general(const Term& a, const Term& b) {
  return more_general(a, b) && !more_general(b, a);
}

bool is_simple_pair(const Term& a, const Term& b) {
  if (contains_universal(a) || contains_universal(b)) return false;
  if (a.is_var() && !occurs(a.as_variable(), b)) return true;
  if (b.is_var() && !occurs(b.as_variable(), a)) return true;
  return false;
}

namespace {

void walk_pairs(const Term& l, const Term& r, std::size_t i, std::size_t j,
                std::vector<std::size_t>& path, std::vector<DisagreementPair>& out) {
  if (l == r) return;
  if (l.is_compound() && r.is_compound() && l.name() == r.name() && l.arity() == r.arity()) {
    for (std::size_t k = 0; k < l.arity(); ++k) {
      path.push_back(k);
      walk_pairs(l.arg(k), r.arg(k), i, j, path, out);
      path.pop_back();
    }
    return;
  }
  out.push_back(DisagreementPair{l, r, i, j, path, is_simple_pair(l, r)});
}

}  // namespace

std::vector<DisagreementPair> disagreement_pairs(std::span<const Atom> atoms) {
  std::vector<DisagreementPair> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].key() != atoms[j].key())
        throw std::invalid_argument("disagreement_pairs: atoms differ in predicate");
      std::vector<std::size_t> path;
      for (std::size_t k = 0; k < atoms[i].args.size(); ++k) {
        path.push_back(k);
        walk_pairs(atoms[i].args[k], atoms[j].args[k], i, j, path, out);
        path.pop_back();
      }
    }
  }
  return out;
}

}  // namespace contest
