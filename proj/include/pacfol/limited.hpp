#pragma once

#include <map>

#include "pacfol/ground.hpp"
#include "pacfol/sat.hpp"

namespace pacfol {

// Duplicate-free ground clause set with a literal -> containing-clauses
// index and a falsum flag set when the empty clause is present.
struct ClauseStore {
  std::set<GroundClause> clauses;
  bool falsum = false;

  static ClauseStore of(std::set<GroundClause> clauses);
  void insert(GroundClause c);
  bool operator==(const ClauseStore&) const = default;
};

// Least fixpoint of s under unit propagation: if a unit l and a clause
// containing ¬l are present, the clause minus ¬l is added.
ClauseStore up_closure(const ClauseStore& s);

// phi ∈ V(u): falsum present, or some clause of u is a subset of phi.
// u is expected to be an up_closure output.
bool subsumed(const GroundClause& phi, const ClauseStore& u);

// Level-z limited entailment: subsumption against U(s) at any level, plus
// up to z case splits over clauses of s (all literals of the split clause
// must succeed one level down).
bool entails_z(const ClauseStore& s, const GroundClause& phi, int z);

// Conjunct-wise lift to ground formulas: phi is converted to an
// equivalence-preserving CNF (no auxiliary atoms) and every conjunct must
// be entailed at level z. Throws ResourceLimitError when phi exceeds the
// direct-CNF atom budget.
bool entails_z_formula(const ClauseStore& s, const GroundFormula& phi, int z,
                       const SatConfig& cfg = {});

}  // namespace pacfol
