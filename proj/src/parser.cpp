#include "contest/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contest/error.hpp"

namespace contest {

namespace {

enum class Tok { Var, Name, QName, Int, String, LParen, RParen, LBrack, RBrack, Comma, Bar,
                 End, Neck, Cut, Semi, Symbol, Eof };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
  bool paren_follows = false;  // '(' immediately after, no layout
};

constexpr std::string_view kSymbolChars = "+-*/\\^<>=~:.?@#&$";

bool is_symbol_char(char c) { return kSymbolChars.find(c) != std::string_view::npos; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_layout();
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::Eof) break;
    }
    return out;
  }

 private:
  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  bool at_end() const { return pos_ >= src_.size(); }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_layout() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        std::size_t l = line_, k = col_;
        advance();
        advance();
        while (!at_end() && !(peek() == '*' && peek(1) == '/')) advance();
        if (at_end()) throw SyntaxError(l, k, "unterminated block comment");
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    Token t{Tok::Eof, "", line_, col_};
    if (at_end()) return t;
    char c = peek();
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Var;
      while (!at_end() && is_alnum(peek())) take(t);
    } else if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::Name;
      while (!at_end() && is_alnum(peek())) take(t);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) take(t);
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))
        throw UnsupportedFeature(t.line, t.col, "floating-point number");
      if (peek() == '\'') throw UnsupportedFeature(t.line, t.col, "character code literal");
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
        throw SyntaxError(line_, col_, "unexpected character after number");
    } else if (c == '\'') {
      t.kind = Tok::QName;
      quoted(t, '\'');
    } else if (c == '"' || c == '`') {
      t.kind = Tok::String;
      quoted(t, c);
    } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '|' ||
               c == '!' || c == ';') {
      advance();
      t.text = std::string(1, c);
      t.kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : c == '[' ? Tok::LBrack
               : c == ']' ? Tok::RBrack : c == ',' ? Tok::Comma : c == '|' ? Tok::Bar
               : c == '!' ? Tok::Cut : Tok::Semi;
      return t;
    } else if (c == '{' || c == '}') {
      throw UnsupportedFeature(t.line, t.col, "curly-brace term");
    } else if (is_symbol_char(c)) {
      if (c == '.') {
        char n = peek(1);
        if (n == '\0' || n == '%' || std::isspace(static_cast<unsigned char>(n))) {
          advance();
          t.kind = Tok::End;
          t.text = ".";
          return t;
        }
      }
      t.kind = Tok::Symbol;
      while (!at_end() && is_symbol_char(peek())) take(t);
      if (t.text == ":-") t.kind = Tok::Neck;
    } else {
      throw SyntaxError(t.line, t.col, std::string("unexpected character '") + c + "'");
    }
    t.paren_follows = peek() == '(';
    return t;
  }

  void take(Token& t) {
    t.text += peek();
    advance();
  }

  void quoted(Token& t, char q) {
    advance();
    for (;;) {
      if (at_end()) throw SyntaxError(t.line, t.col, "unterminated quoted text");
      char c = peek();
      if (c == q) {
        if (peek(1) == q) {
          advance();
          take(t);
          continue;
        }
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (at_end()) throw SyntaxError(t.line, t.col, "unterminated quoted text");
        char e = peek();
        t.text += e == 'n' ? '\n' : e == 't' ? '\t' : e;
        advance();
        continue;
      }
      take(t);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_builtin(const std::string& name, std::size_t arity) {
  static const std::set<std::pair<std::string, std::size_t>> table = {
      {"true", 0},     {"fail", 0},     {"false", 0},     {"halt", 0},      {"nl", 0},
      {"repeat", 0},   {"not", 1},      {"write", 1},     {"print", 1},     {"writeln", 1},
      {"var", 1},      {"nonvar", 1},   {"atom", 1},      {"number", 1},    {"integer", 1},
      {"atomic", 1},   {"compound", 1}, {"callable", 1},  {"ground", 1},    {"assert", 1},
      {"asserta", 1},  {"assertz", 1},  {"retract", 1},   {"halt", 1},      {"once", 1},
      {"ignore", 1},   {"is", 2},       {"=", 2},         {"\\=", 2},       {"==", 2},
      {"\\==", 2},     {"<", 2},        {">", 2},         {"=<", 2},        {">=", 2},
      {"=:=", 2},      {"=\\=", 2},     {"=..", 2},       {"format", 2},    {"copy_term", 2},
      {"functor", 3},  {"arg", 3},      {"findall", 3},   {"bagof", 3},     {"setof", 3},
      {"forall", 2},   {"catch", 3},    {"throw", 1},     {"format", 1},    {"atom_codes", 2},
      {"atom_length", 2}, {"length", 2}, {"msort", 2},    {"sort", 2},      {"keysort", 2},
      {",", 2},        {";", 2},        {"->", 2},        {"\\+", 1},       {"!", 0}};
  if (name == "call") return true;
  return table.count({name, arity}) > 0;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    std::vector<Clause> clauses;
    while (cur().kind != Tok::Eof) clauses.push_back(clause());
    return Program(std::move(clauses));
  }

  Atom goal() {
    begin_clause();
    Atom a = literal();
    if (cur().kind == Tok::Comma) throw NonAtomicGoal("goal must be a single atom");
    if (cur().kind == Tok::End) ++i_;
    if (cur().kind != Tok::Eof) unexpected_after_term();
    Clause c{{}, a, {}};
    finish_clause(c);
    return c.head;
  }

  Term single_term() {
    begin_clause();
    Term t = term();
    if (cur().kind == Tok::End) ++i_;
    if (cur().kind != Tok::Eof) unexpected_after_term();
    Clause c{{}, Atom{"$t", {t}}, {}};
    finish_clause(c);
    return c.head.args[0];
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& peek_next() const { return toks_[std::min(i_ + 1, toks_.size() - 1)]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SyntaxError(t.line, t.col, msg);
  }

  void expect(Tok k, const char* what) {
    if (cur().kind != k) {
      if (cur().kind == Tok::Symbol) unexpected_after_term();
      fail(cur(), std::string("expected ") + what);
    }
    ++i_;
  }

  [[noreturn]] void unexpected_after_term() const {
    const Token& t = cur();
    if (t.kind == Tok::Symbol || (t.kind == Tok::Name && (t.text == "is" || t.text == "mod" ||
                                                          t.text == "rem" || t.text == "xor")))
      throw UnsupportedFeature(t.line, t.col, "operator '" + t.text + "'");
    if (t.kind == Tok::Semi) throw UnsupportedFeature(t.line, t.col, "disjunction ';'");
    if (t.kind == Tok::Neck) throw UnsupportedFeature(t.line, t.col, "operator ':-'");
    if (t.kind == Tok::Eof) fail(t, "unexpected end of input");
    fail(t, "unexpected '" + t.text + "'");
  }

  void begin_clause() {
    anon_ = 0;
    used_names_.clear();
  }

  Clause clause() {
    begin_clause();
    if (cur().kind == Tok::Neck) throw UnsupportedFeature(cur().line, cur().col, "directive");
    Clause c{{}, literal(), {}};
    if (cur().kind == Tok::Neck) {
      ++i_;
      c.body.push_back(literal());
      while (cur().kind == Tok::Comma) {
        ++i_;
        c.body.push_back(literal());
      }
    }
    if (cur().kind != Tok::End) {
      if (cur().kind == Tok::Eof) fail(cur(), "missing '.' at end of clause");
      unexpected_after_term();
    }
    ++i_;
    finish_clause(c);
    return c;
  }

  Atom literal() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Var:
        if (peek_next().kind == Tok::Symbol) {
          const Token& op = peek_next();
          throw UnsupportedFeature(op.line, op.col, "operator '" + op.text + "'");
        }
        throw UnsupportedFeature(t.line, t.col, "variable at predicate position");
      case Tok::Cut:
        throw UnsupportedFeature(t.line, t.col, "cut");
      case Tok::Symbol:
        if (t.text == "\\+") throw UnsupportedFeature(t.line, t.col, "negation '\\+'");
        throw UnsupportedFeature(t.line, t.col, "operator '" + t.text + "'");
      case Tok::Name:
      case Tok::QName:
        break;
      case Tok::LParen:
        throw UnsupportedFeature(t.line, t.col, "parenthesised control construct");
      default:
        fail(t, t.kind == Tok::Eof ? "unexpected end of input" : "expected an atom");
    }
    Token name = t;
    ++i_;
    std::vector<Term> args;
    if (name.paren_follows) args = arguments();
    if (!name.text.empty() && name.text[0] == '$')
      fail(name, "reserved predicate name '" + name.text + "'");
    if (is_builtin(name.text, args.size()))
      throw UnsupportedFeature(name.line, name.col,
                               "built-in predicate " + name.text + "/" +
                                   std::to_string(args.size()));
    if (cur().kind == Tok::Symbol) unexpected_after_term();
    return Atom{name.text, std::move(args)};
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    args.push_back(argument());
    while (cur().kind == Tok::Comma) {
      ++i_;
      args.push_back(argument());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term argument() {
    Term t = term();
    if (cur().kind == Tok::Symbol || (cur().kind == Tok::Name && cur().text == "is"))
      unexpected_after_term();
    return t;
  }

  Term term() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Var: {
        ++i_;
        if (t.text == "_") return Term::var("\x01" + std::to_string(anon_++));
        used_names_.insert(t.text);
        return Term::var(t.text);
      }
      case Tok::Int:
        ++i_;
        if (t.paren_follows) fail(t, "integer used as a functor");
        return Term::constant(t.text);
      case Tok::Name:
      case Tok::QName: {
        Token name = t;
        ++i_;
        if (!name.text.empty() && name.text[0] == '$')
          fail(name, "reserved name '" + name.text + "'");
        if (name.paren_follows) return Term::compound(name.text, arguments());
        return Term::constant(name.text);
      }
      case Tok::LBrack:
        return list();
      case Tok::String:
        throw UnsupportedFeature(t.line, t.col, "string literal");
      case Tok::Symbol:
        throw UnsupportedFeature(t.line, t.col, "operator '" + t.text + "'");
      case Tok::Cut:
        throw UnsupportedFeature(t.line, t.col, "cut");
      case Tok::LParen:
        throw UnsupportedFeature(t.line, t.col, "parenthesised term");
      default:
        fail(t, t.kind == Tok::Eof ? "unexpected end of input" : "expected a term");
    }
  }

  Term list() {
    expect(Tok::LBrack, "'['");
    if (cur().kind == Tok::RBrack) {
      ++i_;
      return Term::constant("[]");
    }
    std::vector<Term> items;
    items.push_back(argument());
    while (cur().kind == Tok::Comma) {
      ++i_;
      items.push_back(argument());
    }
    Term tail = Term::constant("[]");
    if (cur().kind == Tok::Bar) {
      ++i_;
      tail = argument();
    }
    expect(Tok::RBrack, "']'");
    for (std::size_t k = items.size(); k-- > 0;)
      tail = Term::compound(".", {items[k], tail});
    return tail;
  }

  // Gives anonymous variables names that do not clash with the clause's own.
  void finish_clause(Clause& c) {
    if (anon_ == 0) return;
    Substitution ren;
    std::size_t n = 0;
    for (std::size_t k = 0; k < anon_; ++k) {
      std::string name;
      do {
        name = "_" + std::to_string(++n);
      } while (used_names_.count(name));
      ren.bind(Variable{"\x01" + std::to_string(k)}, Term::var(name));
    }
    c.head = apply(ren, c.head);
    for (Atom& b : c.body) b = apply(ren, b);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::size_t anon_ = 0;
  std::set<std::string> used_names_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(Lexer(text).run()).program(); }

Atom parse_goal(std::string_view text) { return Parser(Lexer(text).run()).goal(); }

Term parse_term(std::string_view text) { return Parser(Lexer(text).run()).single_term(); }

}  // namespace contest
