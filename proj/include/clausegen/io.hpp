#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clausegen/expansion.hpp"

// Clause file syntax:
//
//   % comment to end of line
//   c1: p(f(X)) :- p(X).          labelled clause
//   p(X); q(X) :- r(X), s(a).     disjunctive head
//   p(a).                         fact
//   :- q(b).                      goal
//   [].                           empty clause
//
// Identifiers starting with a lowercase letter or digit are predicates,
// functors and constants; identifiers starting with an uppercase letter or
// '_' are variables. A lone '_' is a fresh variable at each occurrence.

namespace clausegen {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ClauseDocument {
  std::vector<Clause> clauses;
  std::vector<std::optional<std::string>> names;
  std::vector<SourcePos> positions;

  const Clause* find(std::string_view label) const {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (names[i] && *names[i] == label) return &clauses[i];
    }
    return nullptr;
  }
};

namespace detail {

enum class Tok { ident, variable, lparen, rparen, comma, semicolon, neck, period, colon, empty, tilde, hash, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      SourcePos pos{line_, col_};
      if (i_ >= text_.size()) {
        out.push_back({Tok::end, "", pos});
        return out;
      }
      char c = text_[i_];
      if (ident_char(c)) {
        std::size_t start = i_;
        while (i_ < text_.size() && ident_char(text_[i_])) advance();
        std::string word(text_.substr(start, i_ - start));
        bool var = std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_';
        out.push_back({var ? Tok::variable : Tok::ident, std::move(word), pos});
        continue;
      }
      if (c == ':' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
        advance();
        advance();
        out.push_back({Tok::neck, ":-", pos});
        continue;
      }
      if (c == '[' && i_ + 1 < text_.size() && text_[i_ + 1] == ']') {
        advance();
        advance();
        out.push_back({Tok::empty, "[]", pos});
        continue;
      }
      Tok kind;
      switch (c) {
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        case ';': kind = Tok::semicolon; break;
        case '.': kind = Tok::period; break;
        case ':': kind = Tok::colon; break;
        case '~': kind = Tok::tilde; break;
        case '#': kind = Tok::hash; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      advance();
      out.push_back({kind, std::string(1, c), pos});
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::variable: return "variable";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::neck: return "':-'";
    case Tok::period: return "'.'";
    case Tok::colon: return "':'";
    case Tok::empty: return "'[]'";
    case Tok::tilde: return "'~'";
    case Tok::hash: return "'#'";
    case Tok::end: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  ClauseDocument document() {
    ClauseDocument doc;
    std::set<std::string> labels;
    while (peek().kind != Tok::end) {
      SourcePos pos = peek().pos;
      std::optional<std::string> label;
      if ((peek().kind == Tok::ident || peek().kind == Tok::variable) && peek(1).kind == Tok::colon) {
        label = next().text;
        next();
        if (!labels.insert(*label).second) throw ParseError("duplicate label '" + *label + "'", pos.line, pos.column);
      }
      doc.clauses.push_back(clause(true));
      doc.names.push_back(std::move(label));
      doc.positions.push_back(pos);
    }
    return doc;
  }

  Clause single_clause() {
    Clause c = clause(false);
    expect_end();
    return c;
  }

  Term single_term() {
    Term t = term();
    expect_end();
    return t;
  }

  Literal single_literal() {
    Literal l = literal();
    expect_end();
    return l;
  }

  std::vector<Term> term_list() {
    std::vector<Term> out;
    if (peek().kind == Tok::end) return out;
    out.push_back(term());
    while (accept(Tok::comma)) out.push_back(term());
    expect_end();
    return out;
  }

  ExpansionScript script() {
    ExpansionScript out;
    if (peek().kind == Tok::end) return out;
    do {
      const Token& t = expect(Tok::ident);
      std::size_t target = 0;
      for (char ch : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("script target must be a clause index", t.pos.line, t.pos.column);
        target = target * 10 + static_cast<std::size_t>(ch - '0');
      }
      expect(Tok::hash);
      out.push_back(ExpansionStep{target, literal()});
    } while (accept(Tok::comma));
    expect_end();
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail(std::string("expected ") + describe(kind) + ", found " + describe(peek().kind));
    return next();
  }
  void expect_end() {
    if (peek().kind != Tok::end) fail(std::string("unexpected ") + describe(peek().kind));
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().pos.line, peek().pos.column);
  }

  Clause clause(bool require_period) {
    std::vector<Literal> lits;
    if (accept(Tok::empty)) {
      accept(Tok::period);
      return Clause{};
    }
    if (peek().kind != Tok::neck) {
      lits.push_back(atom_literal(true));
      while (accept(Tok::semicolon)) lits.push_back(atom_literal(true));
    }
    if (accept(Tok::neck)) {
      lits.push_back(atom_literal(false));
      while (accept(Tok::comma)) lits.push_back(atom_literal(false));
    }
    if (require_period) {
      expect(Tok::period);
    } else {
      accept(Tok::period);
    }
    anonymous_ = 0;
    return Clause(std::move(lits));
  }

  Literal literal() {
    bool positive = !accept(Tok::tilde);
    return atom_literal(positive);
  }

  Literal atom_literal(bool positive) {
    const Token& name = peek();
    if (name.kind != Tok::ident) fail(std::string("expected predicate, found ") + describe(name.kind));
    SourcePos pos = name.pos;
    Term atom = term();
    auto [it, inserted] = predicate_arity_.try_emplace(atom.functor(), atom.arity());
    if (!inserted && it->second != atom.arity())
      throw ParseError("predicate '" + atom.functor() + "' used with arity " + std::to_string(atom.arity()) +
                           " and " + std::to_string(it->second),
                       pos.line, pos.column);
    return Literal(positive, std::move(atom));
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::variable) {
      next();
      if (peek().kind == Tok::lparen) fail("variables cannot take arguments");
      if (t.text == "_") return Term::var("_", ++anonymous_);
      return Term::var(t.text);
    }
    if (t.kind != Tok::ident) fail(std::string("expected term, found ") + describe(t.kind));
    Token name = next();
    if (is_skolem_symbol(name.text))
      throw ParseError("identifier '" + name.text + "' uses the reserved prefix " + std::string(kSkolemPrefix),
                       name.pos.line, name.pos.column);
    std::vector<Term> args;
    if (accept(Tok::lparen)) {
      args.push_back(term());
      while (accept(Tok::comma)) args.push_back(term());
      expect(Tok::rparen);
    }
    return Term::app(std::move(name.text), std::move(args));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::uint32_t anonymous_ = 0;
  std::map<std::string, std::size_t> predicate_arity_;
};

}  // namespace detail

inline ClauseDocument parse_clause_file(std::string_view text) { return detail::Parser(text).document(); }

/// A single clause; the trailing period is optional.
inline Clause parse_clause(std::string_view text) { return detail::Parser(text).single_clause(); }

inline Term parse_term(std::string_view text) { return detail::Parser(text).single_term(); }

/// `p(a)` or `~p(a)`.
inline Literal parse_literal(std::string_view text) { return detail::Parser(text).single_literal(); }

/// Comma-separated terms, e.g. `a, f(a), f(f(a))`.
inline std::vector<Term> parse_term_list(std::string_view text) { return detail::Parser(text).term_list(); }

/// Comma-separated `target#literal` steps, e.g. `0#p(f(f(a))), 0#p(f(a))`.
inline ExpansionScript parse_script(std::string_view text) { return detail::Parser(text).script(); }

/// Display names for variables: Name for index 0, Name_index otherwise,
/// suffixed further when two variables would print alike. One instance names
/// every variable of one output consistently.
class VariableNames {
 public:
  const std::string& operator()(const Variable& v) {
    auto it = names_.find(v);
    if (it != names_.end()) return it->second;
    const std::string base = to_string(v);
    std::string name = base;
    for (std::size_t k = 1; used_.count(name); ++k) name = base + "_" + std::to_string(k);
    used_.insert(name);
    return names_.emplace(v, std::move(name)).first->second;
  }

  /// Claims names for `vars` in order, so they keep their plain spelling.
  void reserve(const std::vector<Variable>& vars) {
    for (const Variable& v : vars) (*this)(v);
  }

 private:
  std::map<Variable, std::string> names_;
  std::set<std::string> used_;
};

inline void format_term(std::string& out, const Term& t, VariableNames& names) {
  if (t.is_variable()) {
    out += names(t.variable());
    return;
  }
  out += t.functor();
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    format_term(out, t.args()[i], names);
  }
  out += ')';
}

inline std::string format_term(const Term& t, VariableNames& names) {
  std::string out;
  format_term(out, t, names);
  return out;
}

inline std::string format_term(const Term& t) {
  VariableNames names;
  return format_term(t, names);
}

inline std::string format_literal(const Literal& l, VariableNames& names) {
  std::string out = l.positive() ? "" : "~";
  format_term(out, l.atom(), names);
  return out;
}

inline std::string format_literal(const Literal& l) {
  VariableNames names;
  return format_literal(l, names);
}

/// Canonical text: `H1; H2 :- B1, B2.`, `H.`, `:- B.`, or `[]`.
inline std::string format_clause(const Clause& c, VariableNames& names) {
  if (c.empty()) return "[]";
  std::string out;
  bool first = true;
  for (const Literal& l : c) {
    if (!l.positive()) continue;
    if (!first) out += "; ";
    first = false;
    format_term(out, l.atom(), names);
  }
  bool body = false;
  for (const Literal& l : c) {
    if (l.positive()) continue;
    out += body ? ", " : (out.empty() ? ":- " : " :- ");
    body = true;
    format_term(out, l.atom(), names);
  }
  return out + ".";
}

inline std::string format_clause(const Clause& c) {
  VariableNames names;
  return format_clause(c, names);
}

/// {X -> f(a), Y -> b}, bindings listed in the order of `order` (variables
/// not bound by s are skipped, bound ones missing from `order` come last).
inline std::string format_substitution(const Substitution& s, const std::vector<Variable>& order,
                                       VariableNames& names) {
  std::string out = "{";
  std::set<Variable> done;
  auto emit = [&](const Variable& v, const Term& t) {
    if (!done.insert(v).second) return;
    if (out.size() > 1) out += ", ";
    out += names(v) + " -> ";
    format_term(out, t, names);
  };
  for (const Variable& v : order)
    if (const Term* t = s.find(v)) emit(v, *t);
  for (const auto& [v, t] : s.bindings()) emit(v, t);
  return out + "}";
}

inline std::string format_substitution(const Substitution& s) {
  VariableNames names;
  return format_substitution(s, {}, names);
}

inline std::string format_script(std::span<const ExpansionStep> script, VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < script.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(script[i].target) + "#" + format_literal(script[i].literal, names);
  }
  return out;
}

inline std::string format_script(std::span<const ExpansionStep> script) {
  VariableNames names;
  return format_script(script, names);
}

inline std::string format_document(const ClauseDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.clauses.size(); ++i) {
    if (doc.names[i]) out += *doc.names[i] + ": ";
    out += format_clause(doc.clauses[i]);
    if (doc.clauses[i].empty()) out += ".";
    out += "\n";
  }
  return out;
}

}  // namespace clausegen
