#pragma once

#include <span>
#include <string>
#include <vector>

#include "contest/program.hpp"
#include "contest/substitution.hpp"
#include "contest/term.hpp"

namespace contest {

using Trace = std::vector<LabelSet>;

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(std::span<const Atom> goal);  // "true" when empty
std::string to_string(const Clause& c);
std::string to_string(const Program& p);
std::string to_string(const Substitution& s);  // {X/a, Y/f(b)}
std::string to_string(ClauseLabel l);
std::string to_string(const LabelSet& s);      // {l1,l2}
std::string to_string(const Trace& t);         // ({l3},{l6,l7})
std::string to_string(const PredicateKey& k);  // p/2

/// Text of a constant or functor symbol, quoted when it is not a bare name.
std::string quote_symbol(const std::string& name);

/// Rendering with variables renamed by first occurrence; equal strings mean
/// the inputs are variants of each other.
std::string canonical_key(const Atom& a);
std::string canonical_key(std::span<const Atom> goal);

/// Renames variables to V1, V2, ... in order of first occurrence.
Atom normalize_variables(const Atom& a);

}  // namespace contest
