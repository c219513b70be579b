#include "contest/substitution.hpp"

namespace contest {

Substitution::Substitution(std::initializer_list<std::pair<const Variable, Term>> init) {
  for (const auto& [v, t] : init) bind(v, t);
}

void Substitution::bind(const Variable& v, const Term& t) {
  if (t.is_var() && t.name() == v.name && t.space() == v.space) {
    bindings_.erase(v);
    return;
  }
  bindings_.insert_or_assign(v, t);
}

const Term* Substitution::lookup(const Variable& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

VarSet Substitution::domain() const {
  VarSet out;
  for (const auto& [v, t] : bindings_) out.insert(v);
  return out;
}

VarSet Substitution::range_variables() const {
  VarSet out;
  for (const auto& [v, t] : bindings_) collect_variables(t, out);
  return out;
}

Substitution Substitution::restricted_to(const VarSet& vars) const {
  Substitution out;
  for (const auto& [v, t] : bindings_)
    if (vars.count(v)) out.bindings_.emplace(v, t);
  return out;
}

bool Substitution::is_idempotent() const {
  VarSet range = range_variables();
  for (const auto& [v, t] : bindings_)
    if (range.count(v)) return false;
  return true;
}

Term apply(const Substitution& s, const Term& t) {
  if (s.empty() || t.ground()) return t;
  if (t.is_var()) {
    const Term* b = s.lookup(t.as_variable());
    return b ? *b : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(s, a));
    changed = changed || args.back().id() != a.id();
  }
  if (!changed) return t;
  return Term::compound(t.name(), std::move(args));
}

Atom apply(const Substitution& s, const Atom& a) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(s, t));
  return out;
}

std::vector<Atom> apply(const Substitution& s, std::span<const Atom> atoms) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(apply(s, a));
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [v, t] : first) out.bind(v, apply(second, t));
  for (const auto& [v, t] : second)
    if (!first.lookup(v)) out.bind(v, t);
  return out;
}

}  // namespace contest
