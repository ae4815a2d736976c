#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "pacfol/ground.hpp"
#include "pacfol/model.hpp"

namespace pacfol {

struct SatConfig {
  // propagation/decision steps before satisfiable() gives up
  uint64_t step_cap = 10'000'000;
  // direct (equivalence-preserving) CNF conversion is used up to this many
  // distinct atoms; Tseitin-style auxiliary atoms beyond
  size_t direct_cnf_max_atoms = 16;
  // clause-count cap for the distributive direct conversion
  size_t direct_cnf_max_clauses = 1 << 15;
};

struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

struct PropInstance {
  std::set<GroundClause> clauses;
  GroundFormula extra = GroundFormula::constant(true);
};

enum class SatStatus { Sat, Unsat };

struct SatResult {
  SatStatus status = SatStatus::Unsat;
  // when sat: a finite assignment over the instance's atoms, verified
  // against every clause and the extra formula; auxiliary atoms excluded
  std::optional<WorldModel> model;
};

// Equivalence-preserving CNF by NNF + distribution; tautological clauses
// dropped. Throws ResourceLimitError past max_clauses.
std::set<GroundClause> to_cnf_exact(const GroundFormula& phi,
                                    size_t max_clauses = 1 << 15);

// Equisatisfiable clause set. Small formulas get the exact conversion;
// larger ones a Tseitin-style transformation with reserved "_t<n>"
// auxiliary atoms (the parser forbids "_"-prefixed user predicates).
std::set<GroundClause> to_clauses(const GroundFormula& phi,
                                  const SatConfig& cfg = {});

// Complete backtracking search with unit propagation and pure-literal
// elimination; branches on the least unassigned atom, false first, so the
// result is deterministic.
SatResult satisfiable(const PropInstance& inst, const SatConfig& cfg = {});

// Grounding trick: kb entails alpha iff the grounding task of kb with
// negated alpha is propositionally unsatisfiable. The SatResult's model,
// when sat, is a countermodel of the entailment.
SatResult check_entails(const ProperPlusKB& kb, const GroundFormula& alpha,
                        const SatConfig& cfg = {});
bool entails(const ProperPlusKB& kb, const GroundFormula& alpha,
             const SatConfig& cfg = {});

}  // namespace pacfol
