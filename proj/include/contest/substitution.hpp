#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "contest/term.hpp"

namespace contest {

/// Finite map from variables to terms. Trivial bindings X/X are never stored.
class Substitution {
 public:
  using Map = std::map<Variable, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Variable, Term>> init);

  /// Adds or replaces a binding without touching other bindings.
  void bind(const Variable& v, const Term& t);
  void erase(const Variable& v) { bindings_.erase(v); }
  const Term* lookup(const Variable& v) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  Map::const_iterator begin() const { return bindings_.begin(); }
  Map::const_iterator end() const { return bindings_.end(); }

  VarSet domain() const;
  VarSet range_variables() const;
  Substitution restricted_to(const VarSet& vars) const;
  bool is_idempotent() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map bindings_;
};

Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);
/// Qualify calls as contest::apply when passing a span; std::apply is found by ADL.
std::vector<Atom> apply(const Substitution& s, std::span<const Atom> atoms);

/// Composition such that apply(compose(a, b), t) == apply(b, apply(a, t)).
Substitution compose(const Substitution& first, const Substitution& second);

}  // namespace contest
