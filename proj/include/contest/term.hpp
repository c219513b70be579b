#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace contest {

/// Program variables come from source text or clause renaming. Universal
/// variables are introduced only by the unification solver.
enum class VarSpace : std::uint8_t { Program, Universal };

struct Variable {
  std::string name;
  VarSpace space = VarSpace::Program;

  bool is_universal() const { return space == VarSpace::Universal; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable&, const Variable&) = default;
};

using VarSet = std::set<Variable>;

/// Immutable first-order term with shared structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, Compound };

  static Term var(const Variable& v);
  static Term var(std::string name, VarSpace space = VarSpace::Program);
  static Term constant(std::string symbol);
  /// A compound with no arguments is a constant.
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_constant() const { return node_->kind == Kind::Const; }
  bool is_compound() const { return node_->kind == Kind::Compound; }

  /// Variable name, constant symbol or functor name.
  const std::string& name() const { return node_->name; }
  VarSpace space() const { return node_->space; }
  bool is_universal_var() const { return is_var() && node_->space == VarSpace::Universal; }
  Variable as_variable() const;

  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }

  bool ground() const { return node_->ground; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }
  /// Node identity; equal ids imply equal terms.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    VarSpace space;
    bool ground;
    std::size_t depth;
    std::size_t hash;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PredicateKey {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateKey&, const PredicateKey&) = default;
  friend std::strong_ordering operator<=>(const PredicateKey&, const PredicateKey&) = default;
};

using FunctorKey = PredicateKey;

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  const Term& arg(std::size_t i) const { return args.at(i); }
  PredicateKey key() const { return {predicate, args.size()}; }
  Term as_term() const;
  static Atom from_term(const Term& t);

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

/// Reserved marker standing for a failed goal. Cannot be written in source.
Atom fail_atom();
bool is_fail_atom(const Atom& a);

void collect_variables(const Term& t, VarSet& out);
VarSet variables(const Term& t);
VarSet variables(const Atom& a);
VarSet variables(std::span<const Atom> atoms);

/// Variables in order of first occurrence, left to right.
std::vector<Variable> ordered_variables(const Atom& a);
std::vector<Variable> ordered_variables(std::span<const Atom> atoms);

bool occurs(const Variable& v, const Term& t);
bool contains_universal(const Term& t);
bool contains_universal(const Atom& a);

bool is_ground(const Atom& a);
std::size_t depth(const Term& t);
/// Maximum argument depth; 0 for a propositional atom.
std::size_t depth(const Atom& a);

}  // namespace contest
