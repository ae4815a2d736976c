#pragma once

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pacfol {

// Rigid designator. Two names are equal iff their tokens are identical;
// the token order doubles as the canonical total order.
struct Name {
  std::string id;
  auto operator<=>(const Name&) const = default;
};

// Clause-scoped variable. Variables never collide with names: a token is a
// variable only when declared in the enclosing clause's quantifier prefix.
struct Variable {
  std::string id;
  auto operator<=>(const Variable&) const = default;
};

using Term = std::variant<Name, Variable>;

struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool is_ground() const;
  size_t arity() const { return args.size(); }
  auto operator<=>(const Atom&) const = default;
};

struct Literal {
  Atom atom;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }
  auto operator<=>(const Literal&) const = default;
};

// Equality-only guard: leaves are `variable = name`, combined with !, &, |.
// Kind::True is the trivially-true guard of an unguarded clause.
struct EqualityFormula {
  enum class Kind { True, Eq, Not, And, Or };

  Kind kind = Kind::True;
  Variable var;  // Eq only
  Name name;     // Eq only
  std::vector<EqualityFormula> kids;

  static EqualityFormula truth() { return {}; }
  static EqualityFormula eq(Variable v, Name n);
  static EqualityFormula neg(EqualityFormula e);
  static EqualityFormula conj(EqualityFormula a, EqualityFormula b);
  static EqualityFormula disj(EqualityFormula a, EqualityFormula b);

  bool trivially_true() const { return kind == Kind::True; }
  bool operator==(const EqualityFormula&) const = default;
};

// Universally closed guarded clause forall(vars): guard => l1 | ... | ln.
struct ForallClause {
  std::vector<Variable> vars;  // declaration order; all body/guard vars appear here
  EqualityFormula guard;
  std::vector<Literal> body;

  // rank = number of distinct variables mentioned
  size_t rank() const { return vars.size(); }
  bool operator==(const ForallClause&) const = default;
};

struct ProperPlusKB {
  std::vector<ForallClause> clauses;  // nonempty after validation

  size_t rank() const;
  bool operator==(const ProperPlusKB&) const = default;
};

// Ground query formula. Name-equality leaves are folded to constants at
// parse time, so only atoms, constants and connectives remain.
struct GroundFormula {
  enum class Kind { Constant, AtomKind, Not, And, Or, Implies };

  Kind kind = Kind::Constant;
  bool value = false;  // Constant
  Atom atom;           // AtomKind
  std::vector<GroundFormula> kids;

  static GroundFormula constant(bool b);
  static GroundFormula make(Atom a);
  static GroundFormula neg(GroundFormula f);
  static GroundFormula conj(GroundFormula a, GroundFormula b);
  static GroundFormula disj(GroundFormula a, GroundFormula b);
  static GroundFormula implies(GroundFormula a, GroundFormula b);

  bool operator==(const GroundFormula&) const = default;
};

std::set<Name> names_of(const Atom& a);
std::set<Name> names_of(const EqualityFormula& e);
std::set<Name> names_of(const ForallClause& c);
std::set<Name> names_of(const ProperPlusKB& kb);
std::set<Name> names_of(const GroundFormula& f);

std::set<Atom> atoms_of(const GroundFormula& f);

// Thrown on malformed input: syntax errors, arity conflicts, empty KBs,
// unacceptable guard equalities. Carries a 1-based line/column when known.
struct ParseError : std::exception {
  std::string message;
  int line = 0;
  int column = 0;

  ParseError(std::string msg, int line_ = 0, int column_ = 0);
  const char* what() const noexcept override { return message.c_str(); }
};

}  // namespace pacfol
