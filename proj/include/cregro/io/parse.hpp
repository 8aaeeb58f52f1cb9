#ifndef CREGRO_IO_PARSE_HPP
#define CREGRO_IO_PARSE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "cregro/element.hpp"
#include "cregro/field.hpp"

namespace cregro::io {

struct SourcePos {
  int line = 1;
  int col = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Lexical, syntactic or semantic error in a script, with position.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(SourcePos pos, const std::string& msg, std::vector<std::string> expected = {})
      : std::runtime_error(render(pos, msg, expected)), pos_(pos), message_(msg), expected_(std::move(expected)) {}

  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string render(SourcePos pos, const std::string& msg, const std::vector<std::string>& expected) {
    std::string s = std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg;
    if (!expected.empty()) {
      s += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
      s += ")";
    }
    return s;
  }
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

enum class TokenKind { Ident, Integer, Symbol, Option, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
  int end_col = 0;  // column just past the token, for adjacency
};

inline const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"ring", "free", "weight", "omega", "epsilon", "let", "inw", "gb", "betti",
                                       "reg", "creg", "truncate", "syz", "ld", "check", "QQ", "GF"};
  return k;
}

inline const std::set<std::string>& command_names() {
  static const std::set<std::string> k{"inw", "gb", "betti", "reg", "creg", "truncate", "syz", "ld", "check"};
  return k;
}

inline bool is_statement_keyword(const Token& t) {
  if (t.kind != TokenKind::Ident) return false;
  return t.text == "ring" || t.text == "free" || t.text == "weight" || t.text == "let" || command_names().count(t.text);
}

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = TokenKind::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = TokenKind::Integer;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (c == '-' && i + 2 < src.size() && src[i + 1] == '-' && std::isalpha(static_cast<unsigned char>(src[i + 2]))) {
      std::size_t j = i + 2;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '-' || src[j] == '_')) ++j;
      t.kind = TokenKind::Option;
      t.text = src.substr(i + 2, j - i - 2);
      advance(j - i);
    } else if (std::string("[](),=+-*^/<>").find(c) != std::string::npos) {
      t.kind = TokenKind::Symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ScriptError(t.pos, std::string("unexpected character '") + c + "'");
    }
    t.end_col = col;
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = TokenKind::End;
  end.pos = {line, col};
  end.end_col = col;
  out.push_back(end);
  return out;
}

// ---- syntax tree ----

struct FieldSpec {
  bool rational = true;
  std::uint64_t p = 0;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct RingDecl {
  FieldSpec field;
  std::vector<std::string> names;
  SourcePos pos;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct FreeDecl {
  std::vector<std::int64_t> shifts;
  SourcePos pos;
  friend bool operator==(const FreeDecl&, const FreeDecl&) = default;
};

struct WeightDecl {
  std::vector<std::int64_t> omega;
  std::vector<std::int64_t> epsilon;
  SourcePos pos;
  friend bool operator==(const WeightDecl&, const WeightDecl&) = default;
};

/// One product of factors; the coefficient is num/den (den > 0).
struct TermAst {
  bool negative = false;
  std::string num = "1";
  std::string den = "1";
  std::vector<std::pair<std::string, std::int64_t>> factors;  // name, exponent
  friend bool operator==(const TermAst&, const TermAst&) = default;
};

struct ElementAst {
  std::vector<TermAst> terms;
  SourcePos pos;
  friend bool operator==(const ElementAst&, const ElementAst&) = default;
};

struct LetDecl {
  std::string name;
  std::vector<ElementAst> elements;
  SourcePos pos;
  friend bool operator==(const LetDecl&, const LetDecl&) = default;
};

struct CommandAst {
  std::string name;                              // inw, gb, ..., check
  std::string check;                             // check name, for `check`
  std::vector<std::string> args;                 // identifiers and integers
  std::map<std::string, std::int64_t> options;  // --seed 7
  SourcePos pos;
  friend bool operator==(const CommandAst&, const CommandAst&) = default;
};

using Statement = std::variant<RingDecl, FreeDecl, WeightDecl, LetDecl, CommandAst>;

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

// ---- parser ----

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  Script parse_script() {
    Script s;
    while (peek().kind != TokenKind::End) s.statements.push_back(statement());
    return s;
  }

  /// "f, g, ..." without brackets, for element lists outside a script.
  std::vector<ElementAst> parse_element_list() {
    std::vector<ElementAst> v;
    if (peek().kind == TokenKind::End) return v;
    v.push_back(element());
    while (accept(",")) v.push_back(element());
    expect_end();
    return v;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ScriptError(t.pos, msg.empty() ? "unexpected " + found : msg + ", found " + found, std::move(expected));
  }

  bool is_sym(const std::string& s) const { return peek().kind == TokenKind::Symbol && peek().text == s; }
  bool is_word(const std::string& s) const { return peek().kind == TokenKind::Ident && peek().text == s; }

  bool accept(const std::string& sym) {
    if (is_sym(sym)) {
      next();
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("", {"'" + sym + "'"});
  }
  void expect_word(const std::string& w) {
    if (!is_word(w)) fail("", {"'" + w + "'"});
    next();
  }
  void expect_end() {
    if (peek().kind != TokenKind::End) fail("", {"end of input"});
  }

  std::string identifier(const std::string& what) {
    if (peek().kind != TokenKind::Ident) fail("", {what});
    if (keywords().count(peek().text)) fail("reserved word used as " + what, {what});
    return next().text;
  }

  std::int64_t integer() {
    bool neg = false;
    if (is_sym("-")) {
      next();
      neg = true;
    }
    if (peek().kind != TokenKind::Integer) fail("", {"integer"});
    const Token& t = next();
    if (t.text.size() > 17) throw ScriptError(t.pos, "integer out of range");
    std::int64_t v = std::stoll(t.text);
    return neg ? -v : v;
  }

  std::vector<std::int64_t> ints() {
    std::vector<std::int64_t> v{integer()};
    while (accept(",")) v.push_back(integer());
    return v;
  }

  Statement statement() {
    const Token& t = peek();
    if (t.kind == TokenKind::Ident) {
      if (t.text == "ring") return ring();
      if (t.text == "free") return free_module();
      if (t.text == "weight") return weight();
      if (t.text == "let") return let();
      if (command_names().count(t.text)) return command();
    }
    fail("", {"'ring'", "'free'", "'weight'", "'let'", "command"});
  }

  RingDecl ring() {
    RingDecl r;
    r.pos = next().pos;
    if (is_word("QQ")) {
      next();
    } else if (is_word("GF")) {
      const Token& g = next();
      expect("(");
      if (peek().kind != TokenKind::Integer) fail("", {"integer"});
      const Token& p = next();
      if (p.text.size() > 12) throw ScriptError(p.pos, "GF argument must be prime");
      r.field.rational = false;
      r.field.p = std::stoull(p.text);
      if (r.field.p >= (std::uint64_t{1} << 31) || !PrimeField::is_prime(r.field.p))
        throw ScriptError(p.pos, "GF argument must be prime");
      expect(")");
      (void)g;
    } else {
      fail("", {"'QQ'", "'GF('"});
    }
    expect("[");
    r.names.push_back(variable_name());
    while (accept(",")) r.names.push_back(variable_name());
    expect("]");
    return r;
  }

  std::string variable_name() {
    SourcePos p = peek().pos;
    std::string n = identifier("variable name");
    if (n.size() >= 2 && n[0] == 'e' && std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ScriptError(p, "variable name '" + n + "' is reserved for basis vectors");
    return n;
  }

  FreeDecl free_module() {
    FreeDecl f;
    f.pos = next().pos;
    if (!(peek().kind == TokenKind::Ident && peek().text == "F")) fail("", {"'F'"});
    next();
    expect("=");
    expect("(");
    f.shifts = ints();
    expect(")");
    return f;
  }

  WeightDecl weight() {
    WeightDecl w;
    w.pos = next().pos;
    expect_word("omega");
    expect("=");
    w.omega = ints();
    expect_word("epsilon");
    expect("=");
    w.epsilon = ints();
    return w;
  }

  LetDecl let() {
    LetDecl l;
    l.pos = next().pos;
    l.name = identifier("module name");
    expect("=");
    expect("[");
    l.elements.push_back(element());
    while (accept(",")) l.elements.push_back(element());
    expect("]");
    return l;
  }

  ElementAst element() {
    ElementAst e;
    e.pos = peek().pos;
    bool neg = false;
    if (accept("-")) neg = true;
    else accept("+");
    e.terms.push_back(term(neg));
    for (;;) {
      if (accept("+")) e.terms.push_back(term(false));
      else if (accept("-")) e.terms.push_back(term(true));
      else break;
    }
    return e;
  }

  TermAst term(bool negative) {
    TermAst t;
    t.negative = negative;
    mpq_class coeff = 1;
    bool any = false;
    do {
      if (peek().kind == TokenKind::Integer) {
        mpz_class num(next().text);
        mpz_class den = 1;
        if (accept("/")) {
          if (peek().kind != TokenKind::Integer) fail("", {"integer"});
          const Token& d = next();
          den = mpz_class(d.text);
          if (den == 0) throw ScriptError(d.pos, "division by zero");
        }
        coeff *= mpq_class(num, den);
        coeff.canonicalize();
      } else if (peek().kind == TokenKind::Ident && !keywords().count(peek().text)) {
        std::string name = next().text;
        std::int64_t ex = 1;
        if (accept("^")) {
          if (peek().kind != TokenKind::Integer) fail("", {"exponent"});
          const Token& x = next();
          if (x.text.size() > 9) throw ScriptError(x.pos, "exponent out of range");
          ex = std::stoll(x.text);
        }
        t.factors.emplace_back(std::move(name), ex);
      } else {
        fail("", {"coefficient", "variable"});
      }
      any = true;
    } while (accept("*"));
    (void)any;
    t.num = coeff.get_num().get_str();
    t.den = coeff.get_den().get_str();
    return t;
  }

  CommandAst command() {
    CommandAst c;
    const Token& head = next();
    c.name = head.text;
    c.pos = head.pos;
    if (c.name == "check") {
      if (peek().kind != TokenKind::Ident) fail("", {"check name"});
      Token n = next();
      c.check = n.text;
      int end = n.end_col;
      int line = n.pos.line;
      // names like crystallization-weak are written with adjacent hyphens
      while (is_sym("-") && peek().pos.line == line && peek().pos.col == end &&
             (peek(1).kind == TokenKind::Ident || peek(1).kind == TokenKind::Integer) &&
             peek(1).pos.col == peek().end_col) {
        next();
        const Token& part = next();
        c.check += "-" + part.text;
        end = part.end_col;
      }
    }
    for (;;) {
      const Token& t = peek();
      if (t.kind == TokenKind::End || is_statement_keyword(t)) break;
      if (t.kind == TokenKind::Option) {
        std::string key = next().text;
        if (peek().kind != TokenKind::Integer) fail("", {"integer"});
        c.options[key] = std::stoll(next().text);
      } else if (t.kind == TokenKind::Ident || t.kind == TokenKind::Integer) {
        c.args.push_back(next().text);
      } else if (t.kind == TokenKind::Symbol && t.text == "-" && peek(1).kind == TokenKind::Integer) {
        next();
        c.args.push_back("-" + next().text);
      } else {
        fail("", {"argument", "statement"});
      }
    }
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline Script parse(const std::string& text) { return Parser(text).parse_script(); }

// ---- printing the syntax tree back ----

inline std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string to_text(const TermAst& t, bool first) {
  std::string s;
  if (t.negative) s += "-";
  else if (!first) s += "+";
  bool unit = t.num == "1" && t.den == "1";
  std::string body;
  if (!unit || t.factors.empty()) body = t.den == "1" ? t.num : t.num + "/" + t.den;
  for (const auto& [n, e] : t.factors) {
    if (!body.empty()) body += "*";
    body += n;
    if (e != 1) body += "^" + std::to_string(e);
  }
  return s + body;
}

inline std::string to_text(const ElementAst& e) {
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) s += to_text(e.terms[i], i == 0);
  return s;
}

inline std::string to_text(const Statement& st) {
  struct V {
    std::string operator()(const RingDecl& r) const {
      std::string s = "ring " + (r.field.rational ? std::string("QQ") : "GF(" + std::to_string(r.field.p) + ")") + "[";
      for (std::size_t i = 0; i < r.names.size(); ++i) s += (i ? "," : "") + r.names[i];
      return s + "]";
    }
    std::string operator()(const FreeDecl& f) const { return "free F=(" + join_ints(f.shifts) + ")"; }
    std::string operator()(const WeightDecl& w) const {
      return "weight omega=" + join_ints(w.omega) + " epsilon=" + join_ints(w.epsilon);
    }
    std::string operator()(const LetDecl& l) const {
      std::string s = "let " + l.name + "=[";
      for (std::size_t i = 0; i < l.elements.size(); ++i) s += (i ? ", " : "") + to_text(l.elements[i]);
      return s + "]";
    }
    std::string operator()(const CommandAst& c) const {
      std::string s = c.name;
      if (!c.check.empty()) s += " " + c.check;
      for (const auto& a : c.args) s += " " + a;
      for (const auto& [k, v] : c.options) s += " --" + k + " " + std::to_string(v);
      return s;
    }
  };
  return std::visit(V{}, st);
}

inline std::string to_text(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += to_text(st) + "\n";
  return out;
}

/// Structural equality ignoring source positions.
inline Script strip_positions(Script s) {
  for (auto& st : s.statements)
    std::visit(
        [](auto& x) {
          x.pos = {};
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, LetDecl>)
            for (auto& e : x.elements) e.pos = {};
        },
        st);
  return s;
}

// ---- resolving elements against a ring ----

/// Variable names plus the rank, enough to read and print elements.
struct Naming {
  std::vector<std::string> vars;

  std::optional<std::size_t> var_index(const std::string& n) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == n) return i;
    return std::nullopt;
  }
};

template <class Field>
typename Field::Element make_coefficient(const Field& K, const TermAst& t) {
  auto c = K.from_fraction(mpz_class(t.num), mpz_class(t.den));
  return t.negative ? K.neg(c) : c;
}

template <class Field>
ModuleElement<Field> resolve(const ModuleSpace<Field>& sp, const Naming& names, const ElementAst& e) {
  std::vector<Term<Field>> terms;
  for (const auto& t : e.terms) {
    auto coeff = make_coefficient(sp.field(), t);
    if (sp.field().is_zero(coeff)) continue;
    Monomial m;
    std::optional<std::uint32_t> comp;
    for (const auto& [n, ex] : t.factors) {
      if (auto vi = names.var_index(n)) {
        std::int64_t v = static_cast<std::int64_t>(m.exp[*vi]) + ex;
        if (v > std::numeric_limits<Exponent>::max()) throw ScriptError(e.pos, "exponent out of range");
        m.exp[*vi] = static_cast<Exponent>(v);
        continue;
      }
      bool basis = n.size() >= 2 && n[0] == 'e' &&
                   std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (!basis) throw ScriptError(e.pos, "unknown variable '" + n + "'");
      if (ex != 1) throw ScriptError(e.pos, "basis vector '" + n + "' raised to a power");
      if (comp) throw ScriptError(e.pos, "term contains two basis vectors");
      long idx = n.size() > 6 ? 0 : std::stol(n.substr(1));
      if (idx < 1 || idx > static_cast<long>(sp.rank()))
        throw ScriptError(e.pos, "basis vector '" + n + "' out of range for rank " + std::to_string(sp.rank()));
      comp = static_cast<std::uint32_t>(idx - 1);
    }
    if (!comp) {
      if (sp.rank() != 1) throw ScriptError(e.pos, "term without basis vector in a module of rank " + std::to_string(sp.rank()));
      comp = 0;
    }
    m.comp = *comp;
    terms.push_back(Term<Field>{std::move(coeff), m});
  }
  return sp.from_terms(std::move(terms));
}

// ---- printing elements ----

inline std::string format_monomial(const Naming& names, const Monomial& m, std::uint32_t rank) {
  std::string s;
  for (std::size_t i = 0; i < names.vars.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.vars[i];
    if (m.exp[i] != 1) s += "^" + std::to_string(m.exp[i]);
  }
  if (rank > 1) {
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(m.comp + 1);
  }
  return s;
}

template <class Field>
std::string format_element(const ModuleSpace<Field>& sp, const Naming& names, const ModuleElement<Field>& f) {
  if (f.is_zero()) return "0";
  const auto& K = sp.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string mono = format_monomial(names, t.mono, sp.rank());
    std::string piece;
    if (mono.empty()) {
      piece = K.to_string(t.coeff);
    } else if (K.is_one(t.coeff)) {
      piece = mono;
    } else if (K.is_one(K.neg(t.coeff))) {
      piece = "-" + mono;
    } else {
      piece = K.to_string(t.coeff) + "*" + mono;
    }
    if (!first && piece[0] != '-') out += "+";
    out += piece;
    first = false;
  }
  return out;
}

/// Reads "f, g, ..." into elements of `sp`.
template <class Field>
std::vector<ModuleElement<Field>> read_elements(const ModuleSpace<Field>& sp, const Naming& names, const std::string& text) {
  std::vector<ModuleElement<Field>> v;
  for (const auto& e : Parser(text).parse_element_list()) v.push_back(resolve(sp, names, e));
  return v;
}

template <class Field>
ModuleElement<Field> read_element(const ModuleSpace<Field>& sp, const Naming& names, const std::string& text) {
  auto v = read_elements(sp, names, text);
  if (v.size() != 1) throw std::invalid_argument("expected exactly one element");
  return v.front();
}

}  // namespace cregro::io

#endif  // CREGRO_IO_PARSE_HPP
