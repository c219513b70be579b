#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "contest/substitution.hpp"
#include "contest/term.hpp"

namespace contest {

/// 1-based position of a clause in program order. Printed as l<n>.
struct ClauseLabel {
  int index = 0;

  friend bool operator==(const ClauseLabel&, const ClauseLabel&) = default;
  friend std::strong_ordering operator<=>(const ClauseLabel&, const ClauseLabel&) = default;
};

using LabelSet = std::set<ClauseLabel>;

struct Clause {
  ClauseLabel label;
  Atom head;
  std::vector<Atom> body;

  bool is_fact() const { return body.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Symbols in order of first occurrence in the program text.
struct Signature {
  std::vector<std::string> constants;
  std::vector<FunctorKey> functors;
  std::vector<PredicateKey> predicates;

  bool has_constant(const std::string& c) const;
  bool has_predicate(const PredicateKey& p) const;
};

class Program {
 public:
  Program() = default;
  /// Relabels clauses 1..n in the given order.
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  const Clause& clause(ClauseLabel label) const;  // throws UnknownLabel
  bool has_label(ClauseLabel label) const;
  const Signature& signature() const { return signature_; }
  bool defines(const PredicateKey& p) const;
  LabelSet labels() const;

 private:
  std::vector<Clause> clauses_;
  Signature signature_;
};

/// Session-wide supply of fresh variable names. Program variables print as
/// _G<n>, universal ones as _U<n>.
class NameSource {
 public:
  Variable fresh_program();
  Variable fresh_universal();
  /// Advances the counters past any reserved-looking names in vars.
  void avoid(const VarSet& vars);
  std::uint64_t issued() const { return (next_program_ - 1) + (next_universal_ - 1); }

 private:
  std::uint64_t next_program_ = 1;
  std::uint64_t next_universal_ = 1;
};

/// Copy of the clause with every variable replaced by a fresh program variable.
Clause rename_apart(const Clause& c, NameSource& names);

/// Renames all variables of the atom to fresh program variables.
Atom rename_apart(const Atom& a, NameSource& names);

}  // namespace contest
