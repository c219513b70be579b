#include "contest/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "contest/error.hpp"

namespace contest {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

UnsupportedFeature::UnsupportedFeature(std::size_t line, std::size_t column,
                                       const std::string& feature)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": unsupported feature: " +
            feature),
      feature_(feature),
      line_(line),
      column_(column) {}

Term Term::var(const Variable& v) { return var(v.name, v.space); }

Term Term::var(std::string name, VarSpace space) {
  std::size_t h = mix(std::hash<std::string>{}(name), space == VarSpace::Universal ? 2 : 1);
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, space, false, 0, h, std::move(name), {}}));
}

Term Term::constant(std::string symbol) {
  std::size_t h = mix(std::hash<std::string>{}(symbol), 3);
  return Term(std::make_shared<const Node>(
      Node{Kind::Const, VarSpace::Program, true, 0, h, std::move(symbol), {}}));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(functor));
  bool ground = true;
  std::size_t d = 0;
  std::size_t h = mix(std::hash<std::string>{}(functor), 4 + args.size());
  for (const Term& a : args) {
    ground = ground && a.ground();
    d = std::max(d, a.depth());
    h = mix(h, a.hash());
  }
  return Term(std::make_shared<const Node>(
      Node{Kind::Compound, VarSpace::Program, ground, d + 1, h, std::move(functor),
           std::move(args)}));
}

Variable Term::as_variable() const {
  if (!is_var()) throw std::logic_error("as_variable on non-variable term");
  return Variable{node_->name, node_->space};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.space != y.space || x.name != y.name ||
      x.args.size() != y.args.size())
    return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!(x.args[i] == y.args[i])) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.space <=> y.space; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Term Atom::as_term() const { return Term::compound(predicate, args); }

Atom Atom::from_term(const Term& t) {
  if (t.is_var()) throw std::invalid_argument("variable is not an atom");
  return Atom{t.name(), std::vector<Term>(t.args().begin(), t.args().end())};
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Atom fail_atom() { return Atom{"$fail", {}}; }

bool is_fail_atom(const Atom& a) { return a.predicate == "$fail" && a.args.empty(); }

void collect_variables(const Term& t, VarSet& out) {
  if (t.ground()) return;
  if (t.is_var()) {
    out.insert(t.as_variable());
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

VarSet variables(const Term& t) {
  VarSet out;
  collect_variables(t, out);
  return out;
}

VarSet variables(const Atom& a) {
  VarSet out;
  for (const Term& t : a.args) collect_variables(t, out);
  return out;
}

VarSet variables(std::span<const Atom> atoms) {
  VarSet out;
  for (const Atom& a : atoms)
    for (const Term& t : a.args) collect_variables(t, out);
  return out;
}

namespace {

void collect_ordered(const Term& t, std::vector<Variable>& out, VarSet& seen) {
  if (t.ground()) return;
  if (t.is_var()) {
    if (seen.insert(t.as_variable()).second) out.push_back(t.as_variable());
    return;
  }
  for (const Term& a : t.args()) collect_ordered(a, out, seen);
}

}  // namespace

std::vector<Variable> ordered_variables(const Atom& a) {
  return ordered_variables(std::span<const Atom>(&a, 1));
}

std::vector<Variable> ordered_variables(std::span<const Atom> atoms) {
  std::vector<Variable> out;
  VarSet seen;
  for (const Atom& a : atoms)
    for (const Term& t : a.args) collect_ordered(t, out, seen);
  return out;
}

bool occurs(const Variable& v, const Term& t) {
  if (t.ground()) return false;
  if (t.is_var()) return t.name() == v.name && t.space() == v.space;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs(v, a); });
}

bool contains_universal(const Term& t) {
  if (t.ground()) return false;
  if (t.is_var()) return t.space() == VarSpace::Universal;
  return std::any_of(t.args().begin(), t.args().end(),
                     [](const Term& a) { return contains_universal(a); });
}

bool contains_universal(const Atom& a) {
  return std::any_of(a.args.begin(), a.args.end(),
                     [](const Term& t) { return contains_universal(t); });
}

bool is_ground(const Atom& a) {
  return std::all_of(a.args.begin(), a.args.end(), [](const Term& t) { return t.ground(); });
}

std::size_t depth(const Term& t) { return t.depth(); }

std::size_t depth(const Atom& a) {
  std::size_t d = 0;
  for (const Term& t : a.args) d = std::max(d, t.depth());
  return d;
}

}  // namespace contest
