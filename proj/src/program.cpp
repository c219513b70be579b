#include "contest/program.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "contest/error.hpp"

namespace contest {

namespace {

void note_term(const Term& t, Signature& sig) {
  if (t.is_var()) return;
  if (t.is_constant()) {
    if (!sig.has_constant(t.name())) sig.constants.push_back(t.name());
    return;
  }
  FunctorKey f{t.name(), t.arity()};
  if (std::find(sig.functors.begin(), sig.functors.end(), f) == sig.functors.end())
    sig.functors.push_back(f);
  for (const Term& a : t.args()) note_term(a, sig);
}

void note_atom(const Atom& a, Signature& sig) {
  if (!sig.has_predicate(a.key())) sig.predicates.push_back(a.key());
  for (const Term& t : a.args) note_term(t, sig);
}

// Parses "<prefix><digits>" and returns the number, or 0.
std::uint64_t reserved_index(const std::string& name, const char* prefix) {
  std::string_view p(prefix);
  if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) return 0;
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + p.size(), name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size()) return 0;
  return n;
}

}  // namespace

bool Signature::has_constant(const std::string& c) const {
  return std::find(constants.begin(), constants.end(), c) != constants.end();
}

bool Signature::has_predicate(const PredicateKey& p) const {
  return std::find(predicates.begin(), predicates.end(), p) != predicates.end();
}

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    clauses_[i].label = ClauseLabel{static_cast<int>(i + 1)};
    note_atom(clauses_[i].head, signature_);
    for (const Atom& b : clauses_[i].body) note_atom(b, signature_);
  }
}

bool Program::has_label(ClauseLabel label) const {
  return label.index >= 1 && static_cast<std::size_t>(label.index) <= clauses_.size();
}

const Clause& Program::clause(ClauseLabel label) const {
  if (!has_label(label)) throw UnknownLabel("unknown clause label l" + std::to_string(label.index));
  return clauses_[static_cast<std::size_t>(label.index - 1)];
}

bool Program::defines(const PredicateKey& p) const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [&](const Clause& c) { return c.head.key() == p; });
}

LabelSet Program::labels() const {
  LabelSet out;
  for (const Clause& c : clauses_) out.insert(c.label);
  return out;
}

Variable NameSource::fresh_program() {
  return Variable{"_G" + std::to_string(next_program_++), VarSpace::Program};
}

Variable NameSource::fresh_universal() {
  return Variable{"_U" + std::to_string(next_universal_++), VarSpace::Universal};
}

void NameSource::avoid(const VarSet& vars) {
  for (const Variable& v : vars) {
    next_program_ = std::max(next_program_, reserved_index(v.name, "_G") + 1);
    next_universal_ = std::max(next_universal_, reserved_index(v.name, "_U") + 1);
  }
}

namespace {

Term rename_term(const Term& t, std::map<Variable, Term>& map, NameSource& names) {
  if (t.ground()) return t;
  if (t.is_var()) {
    auto [it, inserted] = map.try_emplace(t.as_variable(), t);
    if (inserted) it->second = Term::var(names.fresh_program());
    return it->second;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(rename_term(a, map, names));
  return Term::compound(t.name(), std::move(args));
}

Atom rename_atom(const Atom& a, std::map<Variable, Term>& map, NameSource& names) {
  Atom out{a.predicate, {}};
  for (const Term& t : a.args) out.args.push_back(rename_term(t, map, names));
  return out;
}

}  // namespace

Clause rename_apart(const Clause& c, NameSource& names) {
  std::map<Variable, Term> map;
  Clause out{c.label, rename_atom(c.head, map, names), {}};
  for (const Atom& b : c.body) out.body.push_back(rename_atom(b, map, names));
  return out;
}

Atom rename_apart(const Atom& a, NameSource& names) {
  std::map<Variable, Term> map;
  return rename_atom(a, map, names);
}

}  // namespace contest
