#pragma once

#include <string_view>

#include "contest/program.hpp"
#include "contest/term.hpp"

namespace contest {

/// Parses Edinburgh-syntax definite clauses. Rejects anything outside the
/// pure fragment with UnsupportedFeature; malformed text raises SyntaxError.
Program parse_program(std::string_view text);

/// Parses a single atomic goal; a trailing '.' is optional. A conjunction
/// raises NonAtomicGoal.
Atom parse_goal(std::string_view text);

Term parse_term(std::string_view text);

}  // namespace contest
