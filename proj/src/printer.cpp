#include "contest/printer.hpp"

#include <cctype>

namespace contest {

namespace {

bool is_bare_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_list_cell(const Term& t) { return t.is_compound() && t.name() == "." && t.arity() == 2; }

void print(const Term& t, std::string& out);

void print_list(const Term& t, std::string& out) {
  out += '[';
  const Term* cur = &t;
  bool first = true;
  while (is_list_cell(*cur)) {
    if (!first) out += ',';
    first = false;
    print(cur->arg(0), out);
    cur = &cur->arg(1);
  }
  if (!(cur->is_constant() && cur->name() == "[]")) {
    out += '|';
    print(*cur, out);
  }
  out += ']';
}

void print(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += t.name();
    return;
  }
  if (is_list_cell(t)) {
    print_list(t, out);
    return;
  }
  out += quote_symbol(t.name());
  if (t.is_compound()) {
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) out += ',';
      print(t.arg(i), out);
    }
    out += ')';
  }
}

void print_atom(const Atom& a, std::string& out) {
  out += quote_symbol(a.predicate);
  if (a.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ',';
    print(a.args[i], out);
  }
  out += ')';
}

}  // namespace

std::string quote_symbol(const std::string& name) {
  if (is_bare_name(name) || is_integer(name) || name == "[]") return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
  return out;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Atom& a) {
  std::string out;
  print_atom(a, out);
  return out;
}

std::string to_string(std::span<const Atom> goal) {
  if (goal.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < goal.size(); ++i) {
    if (i) out += ", ";
    print_atom(goal[i], out);
  }
  return out;
}

std::string to_string(const Clause& c) {
  std::string out = to_string(c.head);
  if (!c.body.empty()) out += " :- " + to_string(std::span<const Atom>(c.body));
  out += '.';
  return out;
}

std::string to_string(const Program& p) {
  std::string out;
  for (const Clause& c : p.clauses()) out += to_string(c) + '\n';
  return out;
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += v.name + '/' + to_string(t);
  }
  return out + '}';
}

std::string to_string(ClauseLabel l) { return "l" + std::to_string(l.index); }

std::string to_string(const LabelSet& s) {
  std::string out = "{";
  bool first = true;
  for (ClauseLabel l : s) {
    if (!first) out += ',';
    first = false;
    out += to_string(l);
  }
  return out + '}';
}

std::string to_string(const Trace& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += to_string(t[i]);
  }
  return out + ')';
}

std::string to_string(const PredicateKey& k) {
  return quote_symbol(k.name) + '/' + std::to_string(k.arity);
}

namespace {

Substitution renaming_by_occurrence(std::span<const Atom> goal, const char* prefix,
                                    bool mark_universal) {
  Substitution ren;
  std::size_t n = 0;
  for (const Variable& v : ordered_variables(goal)) {
    std::string name = prefix + std::to_string(++n);
    if (mark_universal && v.is_universal()) name = "#" + name;
    ren.bind(v, Term::var(name));
  }
  return ren;
}

}  // namespace

std::string canonical_key(std::span<const Atom> goal) {
  return to_string(std::span<const Atom>(contest::apply(renaming_by_occurrence(goal, "#", true), goal)));
}

std::string canonical_key(const Atom& a) { return canonical_key(std::span<const Atom>(&a, 1)); }

Atom normalize_variables(const Atom& a) {
  std::span<const Atom> g(&a, 1);
  return apply(renaming_by_occurrence(g, "V", false), a);
}

}  // namespace contest
