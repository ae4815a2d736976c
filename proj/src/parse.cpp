#include "pacfol/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace pacfol {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Colon,
  Bang,
  Amp,
  Pipe,
  Eq,
  Neq,
  Implies,
  Newline,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        out.push_back({Tok::Newline, "\n", line_, col_});
        advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      int line = line_, col = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          id += src_[pos_];
          advance();
        }
        out.push_back({Tok::Ident, id, line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          num += src_[pos_];
          advance();
        }
        out.push_back({Tok::Number, num, line, col});
        continue;
      }
      switch (c) {
        case '(':
          out.push_back({Tok::LParen, "(", line, col});
          advance();
          break;
        case ')':
          out.push_back({Tok::RParen, ")", line, col});
          advance();
          break;
        case ',':
          out.push_back({Tok::Comma, ",", line, col});
          advance();
          break;
        case ':':
          out.push_back({Tok::Colon, ":", line, col});
          advance();
          break;
        case '&':
          out.push_back({Tok::Amp, "&", line, col});
          advance();
          break;
        case '|':
          out.push_back({Tok::Pipe, "|", line, col});
          advance();
          break;
        case '!':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '=') {
            advance();
            out.push_back({Tok::Neq, "!=", line, col});
          } else {
            out.push_back({Tok::Bang, "!", line, col});
          }
          break;
        case '=':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '>') {
            advance();
            out.push_back({Tok::Implies, "=>", line, col});
          } else {
            out.push_back({Tok::Eq, "=", line, col});
          }
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, col);
      }
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "true" || s == "false";
}

bool name_shaped(const Token& t, bool allow_reserved) {
  if (t.kind == Tok::Number) return true;
  if (t.kind != Tok::Ident || is_keyword(t.text)) return false;
  char c = t.text[0];
  if (c == '_') return allow_reserved;
  if (!std::islower(static_cast<unsigned char>(c))) return false;
  for (char ch : t.text)
    if (std::isupper(static_cast<unsigned char>(ch))) return false;
  return true;
}

bool pred_shaped(const Token& t) {
  return t.kind == Tok::Ident && !is_keyword(t.text) &&
         std::isupper(static_cast<unsigned char>(t.text[0]));
}

class Parser {
 public:
  Parser(std::vector<Token> toks, bool allow_reserved_names)
      : toks_(std::move(toks)), allow_reserved_(allow_reserved_names) {}

  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool accept(Tok k) {
    if (peek().kind == k) {
      next();
      return true;
    }
    return false;
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what + ", got '" + peek().text + "'",
                       peek().line, peek().column);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  bool at_end() const { return peek().kind == Tok::End; }

  // --- shared pieces ---------------------------------------------------

  Name parse_name() {
    if (!name_shaped(peek(), allow_reserved_))
      fail("expected a name, got '" + peek().text + "'");
    return Name{next().text};
  }

  Term parse_term(const std::set<std::string>& vars) {
    const Token& t = peek();
    if (t.kind == Tok::Ident && vars.count(t.text)) {
      next();
      return Variable{t.text};
    }
    return parse_name();
  }

  Atom parse_atom(const std::set<std::string>& vars,
                  std::map<std::string, size_t>& arities) {
    if (!pred_shaped(peek()))
      fail("expected a predicate (uppercase identifier), got '" + peek().text +
           "'");
    Atom a;
    a.pred = next().text;
    if (accept(Tok::LParen)) {
      a.args.push_back(parse_term(vars));
      while (accept(Tok::Comma)) a.args.push_back(parse_term(vars));
      expect(Tok::RParen, "')'");
    }
    auto [it, inserted] = arities.emplace(a.pred, a.args.size());
    if (!inserted && it->second != a.args.size())
      fail("arity conflict for predicate '" + a.pred + "': used with " +
           std::to_string(it->second) + " and " + std::to_string(a.args.size()) +
           " arguments");
    return a;
  }

  // --- guard (equality formula) ----------------------------------------
  // precedence: ! > & > |

  EqualityFormula parse_eq_leaf(const std::set<std::string>& vars) {
    if (peek().kind == Tok::LParen) {
      next();
      EqualityFormula e = parse_eq_or(vars);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (peek().kind == Tok::Bang) {
      next();
      return EqualityFormula::neg(parse_eq_leaf(vars));
    }
    const Token& lhs = peek();
    if (lhs.kind != Tok::Ident || !vars.count(lhs.text))
      fail("unacceptable equality: left side '" + lhs.text +
           "' is not a declared variable");
    next();
    bool negated = false;
    if (accept(Tok::Neq))
      negated = true;
    else
      expect(Tok::Eq, "'=' or '!='");
    if (peek().kind == Tok::Ident && vars.count(peek().text))
      fail("unacceptable equality: right side '" + peek().text +
           "' must be a name, not a variable");
    Name rhs = parse_name();
    EqualityFormula e = EqualityFormula::eq(Variable{lhs.text}, rhs);
    return negated ? EqualityFormula::neg(std::move(e)) : e;
  }

  EqualityFormula parse_eq_and(const std::set<std::string>& vars) {
    EqualityFormula e = parse_eq_leaf(vars);
    while (peek().kind == Tok::Amp) {
      next();
      e = EqualityFormula::conj(std::move(e), parse_eq_leaf(vars));
    }
    return e;
  }

  EqualityFormula parse_eq_or(const std::set<std::string>& vars) {
    EqualityFormula e = parse_eq_and(vars);
    while (peek().kind == Tok::Pipe) {
      next();
      e = EqualityFormula::disj(std::move(e), parse_eq_and(vars));
    }
    return e;
  }

  // --- clause ----------------------------------------------------------

  ForallClause parse_clause(std::map<std::string, size_t>& arities,
                            const ParseOptions& opts) {
    const Token& kw = expect(Tok::Ident, "'forall'");
    if (kw.text != "forall")
      throw ParseError("expected 'forall', got '" + kw.text + "'", kw.line,
                       kw.column);
    ForallClause c;
    std::set<std::string> vars;
    if (peek().kind == Tok::Ident) {
      do {
        const Token& v = expect(Tok::Ident, "variable");
        if (is_keyword(v.text))
          throw ParseError("'" + v.text + "' cannot be a variable", v.line,
                           v.column);
        if (!vars.insert(v.text).second)
          throw ParseError("duplicate variable '" + v.text + "'", v.line,
                           v.column);
        c.vars.push_back(Variable{v.text});
      } while (accept(Tok::Comma));
    }
    expect(Tok::Colon, "':'");

    // A '=>' somewhere before the end of the clause means a guard is present
    // (guards cannot contain '=>', bodies cannot either).
    bool has_guard = false;
    for (size_t i = 0;; ++i) {
      Tok k = peek(i).kind;
      if (k == Tok::Newline || k == Tok::End) break;
      if (k == Tok::Implies) {
        has_guard = true;
        break;
      }
    }
    if (has_guard) {
      c.guard = parse_eq_or(vars);
      expect(Tok::Implies, "'=>'");
    } else {
      c.guard = EqualityFormula::truth();
    }

    do {
      Literal lit;
      if (accept(Tok::Bang)) {
        if (opts.positive_only)
          fail("negated atom in clause body (positive-only mode)");
        lit.positive = false;
      }
      lit.atom = parse_atom(vars, arities);
      c.body.push_back(std::move(lit));
    } while (accept(Tok::Pipe));
    return c;
  }

  // --- ground query ----------------------------------------------------
  // precedence: ! > & > | > =>, with => right-associative

  GroundFormula parse_query_leaf(std::map<std::string, size_t>& arities) {
    if (peek().kind == Tok::LParen) {
      next();
      GroundFormula f = parse_query_imp(arities);
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind == Tok::Bang) {
      next();
      return GroundFormula::neg(parse_query_leaf(arities));
    }
    if (peek().kind == Tok::Ident &&
        (peek().text == "true" || peek().text == "false"))
      return GroundFormula::constant(next().text == "true");
    if (pred_shaped(peek())) {
      static const std::set<std::string> no_vars;
      Atom a = parse_atom(no_vars, arities);
      return GroundFormula::make(std::move(a));
    }
    // name (in)equality, folded to a constant: names are rigid
    Name lhs = parse_name();
    bool negated = false;
    if (accept(Tok::Neq))
      negated = true;
    else
      expect(Tok::Eq, "'=' or '!='");
    Name rhs = parse_name();
    return GroundFormula::constant((lhs == rhs) != negated);
  }

  GroundFormula parse_query_and(std::map<std::string, size_t>& arities) {
    GroundFormula f = parse_query_leaf(arities);
    while (peek().kind == Tok::Amp) {
      next();
      f = GroundFormula::conj(std::move(f), parse_query_leaf(arities));
    }
    return f;
  }

  GroundFormula parse_query_or(std::map<std::string, size_t>& arities) {
    GroundFormula f = parse_query_and(arities);
    while (peek().kind == Tok::Pipe) {
      next();
      f = GroundFormula::disj(std::move(f), parse_query_and(arities));
    }
    return f;
  }

  GroundFormula parse_query_imp(std::map<std::string, size_t>& arities) {
    GroundFormula f = parse_query_or(arities);
    if (peek().kind == Tok::Implies) {
      next();
      f = GroundFormula::implies(std::move(f), parse_query_imp(arities));
    }
    return f;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  bool allow_reserved_;
};

void collect_arities(const GroundFormula& f,
                     std::map<std::string, size_t>& arities,
                     std::string* conflict) {
  if (f.kind == GroundFormula::Kind::AtomKind) {
    auto [it, inserted] = arities.emplace(f.atom.pred, f.atom.args.size());
    if (!inserted && it->second != f.atom.args.size() && conflict->empty())
      *conflict = f.atom.pred;
    return;
  }
  for (const auto& k : f.kids) collect_arities(k, arities, conflict);
}

}  // namespace

ProperPlusKB parse_kb(const std::string& text, const ParseOptions& opts) {
  Parser p(Lexer(text).run(), /*allow_reserved_names=*/false);
  ProperPlusKB kb;
  std::map<std::string, size_t> arities;
  p.skip_newlines();
  while (!p.at_end()) {
    kb.clauses.push_back(p.parse_clause(arities, opts));
    if (!p.at_end()) p.expect(Tok::Newline, "end of clause");
    p.skip_newlines();
  }
  if (kb.clauses.empty()) throw ParseError("empty KB: no clauses found");
  return kb;
}

GroundFormula parse_query(const std::string& text) {
  // newlines act as whitespace in queries
  std::string flat = text;
  for (char& c : flat)
    if (c == '\n') c = ' ';
  Parser p(Lexer(flat).run(), /*allow_reserved_names=*/false);
  std::map<std::string, size_t> arities;
  GroundFormula f = p.parse_query_imp(arities);
  if (!p.at_end()) p.fail("trailing input after query");
  return f;
}

Atom parse_ground_atom(const std::string& text) {
  Parser p(Lexer(text).run(), /*allow_reserved_names=*/true);
  std::map<std::string, size_t> arities;
  static const std::set<std::string> no_vars;
  Atom a = p.parse_atom(no_vars, arities);
  if (!p.at_end()) p.fail("trailing input after atom");
  if (!a.is_ground()) throw ParseError("atom is not ground: " + text);
  return a;
}

void check_arities(const ProperPlusKB& kb, const GroundFormula& query) {
  std::map<std::string, size_t> arities;
  std::string conflict;
  for (const auto& c : kb.clauses)
    for (const auto& lit : c.body) {
      auto [it, inserted] = arities.emplace(lit.atom.pred, lit.atom.args.size());
      if (!inserted && it->second != lit.atom.args.size())
        throw ParseError("arity conflict for predicate '" + lit.atom.pred + "'");
    }
  collect_arities(query, arities, &conflict);
  if (!conflict.empty())
    throw ParseError("arity conflict for predicate '" + conflict + "'");
}

}  // namespace pacfol
