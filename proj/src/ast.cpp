#include "pacfol/ast.hpp"

#include <algorithm>

namespace pacfol {

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& t) {
    return std::holds_alternative<Name>(t);
  });
}

EqualityFormula EqualityFormula::eq(Variable v, Name n) {
  EqualityFormula e;
  e.kind = Kind::Eq;
  e.var = std::move(v);
  e.name = std::move(n);
  return e;
}

EqualityFormula EqualityFormula::neg(EqualityFormula child) {
  EqualityFormula e;
  e.kind = Kind::Not;
  e.kids.push_back(std::move(child));
  return e;
}

EqualityFormula EqualityFormula::conj(EqualityFormula a, EqualityFormula b) {
  EqualityFormula e;
  e.kind = Kind::And;
  e.kids.push_back(std::move(a));
  e.kids.push_back(std::move(b));
  return e;
}

EqualityFormula EqualityFormula::disj(EqualityFormula a, EqualityFormula b) {
  EqualityFormula e;
  e.kind = Kind::Or;
  e.kids.push_back(std::move(a));
  e.kids.push_back(std::move(b));
  return e;
}

size_t ProperPlusKB::rank() const {
  size_t r = 0;
  for (const auto& c : clauses) r = std::max(r, c.rank());
  return r;
}

GroundFormula GroundFormula::constant(bool b) {
  GroundFormula f;
  f.kind = Kind::Constant;
  f.value = b;
  return f;
}

GroundFormula GroundFormula::make(Atom a) {
  GroundFormula f;
  f.kind = Kind::AtomKind;
  f.atom = std::move(a);
  return f;
}

GroundFormula GroundFormula::neg(GroundFormula child) {
  GroundFormula f;
  f.kind = Kind::Not;
  f.kids.push_back(std::move(child));
  return f;
}

GroundFormula GroundFormula::conj(GroundFormula a, GroundFormula b) {
  GroundFormula f;
  f.kind = Kind::And;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

GroundFormula GroundFormula::disj(GroundFormula a, GroundFormula b) {
  GroundFormula f;
  f.kind = Kind::Or;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

GroundFormula GroundFormula::implies(GroundFormula a, GroundFormula b) {
  GroundFormula f;
  f.kind = Kind::Implies;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

std::set<Name> names_of(const Atom& a) {
  std::set<Name> out;
  for (const auto& t : a.args)
    if (const Name* n = std::get_if<Name>(&t)) out.insert(*n);
  return out;
}

std::set<Name> names_of(const EqualityFormula& e) {
  std::set<Name> out;
  if (e.kind == EqualityFormula::Kind::Eq) {
    out.insert(e.name);
    return out;
  }
  for (const auto& k : e.kids) {
    auto sub = names_of(k);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<Name> names_of(const ForallClause& c) {
  std::set<Name> out = names_of(c.guard);
  for (const auto& lit : c.body) {
    auto sub = names_of(lit.atom);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<Name> names_of(const ProperPlusKB& kb) {
  std::set<Name> out;
  for (const auto& c : kb.clauses) {
    auto sub = names_of(c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<Name> names_of(const GroundFormula& f) {
  std::set<Name> out;
  if (f.kind == GroundFormula::Kind::AtomKind) return names_of(f.atom);
  for (const auto& k : f.kids) {
    auto sub = names_of(k);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<Atom> atoms_of(const GroundFormula& f) {
  std::set<Atom> out;
  if (f.kind == GroundFormula::Kind::AtomKind) {
    out.insert(f.atom);
    return out;
  }
  for (const auto& k : f.kids) {
    auto sub = atoms_of(k);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

ParseError::ParseError(std::string msg, int line_, int column_)
    : message(std::move(msg)), line(line_), column(column_) {
  if (line > 0) {
    message += " (line " + std::to_string(line);
    if (column > 0) message += ", column " + std::to_string(column);
    message += ")";
  }
}

}  // namespace pacfol
