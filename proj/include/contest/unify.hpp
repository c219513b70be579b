#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "contest/substitution.hpp"
#include "contest/term.hpp"

namespace contest {

/// Most general unifier with occurs check. The result is idempotent. When an
/// equation relates two variables, or a variable on the right with a
/// non-variable, the right-hand variable is bound; so calling mgu(goal, head)
/// binds head variables in preference to goal variables.
std::optional<Substitution> mgu(const Term& a, const Term& b);
std::optional<Substitution> mgu(const Atom& a, const Atom& b);
bool unifiable(const Atom& a, const Atom& b);

/// One-sided matching: a substitution s with apply(s, pattern) == target.
std::optional<Substitution> match(const Term& pattern, const Term& target);
std::optional<Substitution> match(const Atom& pattern, const Atom& target);
std::optional<Substitution> match(std::span<const Atom> pattern, std::span<const Atom> target);

/// a <= b: b is an instance of a.
bool more_general(const Term& a, const Term& b);
bool more_general(const Atom& a, const Atom& b);
bool more_general(std::span<const Atom> a, std::span<const Atom> b);
bool is_variant(const Atom& a, const Atom& b);
bool strictly_more_general(const Term& a, const Term& b);

struct DisagreementPair {
  Term left;
  Term right;
  std::size_t left_atom = 0;   // index into the input sequence
  std::size_t right_atom = 0;
  std::vector<std::size_t> position;  // 0-based argument path from the atom
  bool simple = false;
};

/// Outermost differing subterm pairs for every pair of atoms i < j.
/// All atoms must share predicate and arity (std::invalid_argument otherwise).
std::vector<DisagreementPair> disagreement_pairs(std::span<const Atom> atoms);

/// One side is a variable not occurring in the other, and no universal
/// variable is involved.
bool is_simple_pair(const Term& a, const Term& b);

}  // namespace contest
