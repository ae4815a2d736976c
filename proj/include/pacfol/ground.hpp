#pragma once

#include <map>
#include <set>

#include "pacfol/ast.hpp"

namespace pacfol {

// Maps a clause's variables to names. Total on the clause's vars when applied.
using Substitution = std::map<Variable, Name>;

// Set of ground literals, duplicates collapsed, kept sorted. The empty
// clause denotes falsum.
struct GroundClause {
  std::vector<Literal> lits;

  static GroundClause of(std::vector<Literal> lits);
  bool empty() const { return lits.empty(); }
  bool contains(const Literal& l) const;
  // true when some atom occurs both positively and negatively
  bool tautological() const;
  auto operator<=>(const GroundClause&) const = default;
};

std::string print(const GroundClause& c);
std::set<Name> names_of(const GroundClause& c);
std::set<Atom> atoms_of(const GroundClause& c);
std::set<Atom> atoms_of(const std::set<GroundClause>& cs);

// Propositional entailment task: grounded KB plus negated query over a
// finite name universe.
struct GroundTask {
  std::set<GroundClause> kb_clauses;
  GroundFormula negated_query;
  std::set<Name> name_universe;
};

// Truth of a guard under a substitution binding all of its variables.
// Equality is name identity. Throws std::invalid_argument on unbound vars.
bool eval_guard(const EqualityFormula& e, const Substitution& theta);

Atom apply(const Atom& a, const Substitution& theta);
Literal apply(const Literal& l, const Substitution& theta);
GroundClause apply(const ForallClause& c, const Substitution& theta);

// All guard-passing groundings of the KB over Z = names_of(kb) ∪ extra.
// Substitutions range over Z with repetition allowed.
std::set<GroundClause> gnd_with_names(const ProperPlusKB& kb,
                                      const std::set<Name>& extra);

// `count` names not in `avoid`, tokens "_f1", "_f2", ... skipping collisions.
// The "_" prefix is rejected by the parser, so freshness is syntactic.
std::vector<Name> fresh_names(const std::set<Name>& avoid, size_t count);

// gnd_with_names(kb, fresh_names(names_of(kb), z))
std::set<GroundClause> gnd_z(const ProperPlusKB& kb, size_t z);

// Grounding-trick task: Z = names_of(kb) ∪ names_of(alpha) ∪ rank(kb) fresh
// names; kb grounded over Z; negated_query = ¬alpha. Passing extra > rank
// grounds over that many fresh names instead.
GroundTask gnd_minus(const ProperPlusKB& kb, const GroundFormula& alpha);
GroundTask gnd_minus(const ProperPlusKB& kb, const GroundFormula& alpha,
                     size_t extra);

}  // namespace pacfol
