#include "pacfol/print.hpp"

namespace pacfol {

namespace {

// precedence levels: | = 1, & = 2, ! and leaves = 3
std::string print_eq(const EqualityFormula& e, int parent_prec) {
  using K = EqualityFormula::Kind;
  switch (e.kind) {
    case K::True:
      return "true";
    case K::Eq:
      return e.var.id + " = " + e.name.id;
    case K::Not: {
      const auto& k = e.kids[0];
      if (k.kind == K::Eq) return k.var.id + " != " + k.name.id;
      return "!" + print_eq(k, 3);
    }
    case K::And: {
      // left-associative parse: a right-nested & needs its parentheses back
      std::string s = print_eq(e.kids[0], 2) + " & " + print_eq(e.kids[1], 3);
      return parent_prec > 2 ? "(" + s + ")" : s;
    }
    case K::Or: {
      std::string s = print_eq(e.kids[0], 1) + " | " + print_eq(e.kids[1], 2);
      return parent_prec > 1 ? "(" + s + ")" : s;
    }
  }
  return {};
}

// precedence levels: => = 0 (right-assoc), | = 1, & = 2, ! and leaves = 3
std::string print_gf(const GroundFormula& f, int parent_prec) {
  using K = GroundFormula::Kind;
  switch (f.kind) {
    case K::Constant:
      return f.value ? "true" : "false";
    case K::AtomKind:
      return print(f.atom);
    case K::Not:
      return "!" + print_gf(f.kids[0], 3);
    case K::And: {
      // left-associative parse: a right-nested & needs its parentheses back
      std::string s = print_gf(f.kids[0], 2) + " & " + print_gf(f.kids[1], 3);
      return parent_prec > 2 ? "(" + s + ")" : s;
    }
    case K::Or: {
      std::string s = print_gf(f.kids[0], 1) + " | " + print_gf(f.kids[1], 2);
      return parent_prec > 1 ? "(" + s + ")" : s;
    }
    case K::Implies: {
      // right-associative: the left side needs strictly higher precedence
      std::string s = print_gf(f.kids[0], 1) + " => " + print_gf(f.kids[1], 0);
      return parent_prec > 0 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

std::string print(const Term& t) {
  if (const Name* n = std::get_if<Name>(&t)) return n->id;
  return std::get<Variable>(t).id;
}

std::string print(const Atom& a) {
  if (a.args.empty()) return a.pred;
  std::string s = a.pred + "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ", ";
    s += print(a.args[i]);
  }
  return s + ")";
}

std::string print(const Literal& l) {
  return (l.positive ? "" : "!") + print(l.atom);
}

std::string print(const EqualityFormula& e) { return print_eq(e, 0); }

std::string print(const ForallClause& c) {
  std::string s = "forall";
  if (!c.vars.empty()) {
    s += " ";
    for (size_t i = 0; i < c.vars.size(); ++i) {
      if (i) s += ", ";
      s += c.vars[i].id;
    }
  }
  s += " : ";
  if (!c.guard.trivially_true()) s += print(c.guard) + " => ";
  for (size_t i = 0; i < c.body.size(); ++i) {
    if (i) s += " | ";
    s += print(c.body[i]);
  }
  return s;
}

std::string print(const ProperPlusKB& kb) {
  std::string s;
  for (size_t i = 0; i < kb.clauses.size(); ++i) {
    if (i) s += "\n";
    s += print(kb.clauses[i]);
  }
  return s;
}

std::string print(const GroundFormula& f) { return print_gf(f, 0); }

}  // namespace pacfol
