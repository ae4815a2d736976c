#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pacfol/ast.hpp"
#include "pacfol/ground.hpp"

namespace pacfol {

// Total model over ground atoms: finite overrides plus a default value for
// every unlisted atom, so evaluation is total on all ground formulas.
struct WorldModel {
  std::map<Atom, bool> assignment;
  bool default_value = false;

  bool value(const Atom& a) const {
    auto it = assignment.find(a);
    return it == assignment.end() ? default_value : it->second;
  }
  bool operator==(const WorldModel&) const = default;
};

// Three-valued partial model: unlisted atoms are unknown.
struct PartialModel {
  std::map<Atom, bool> observed;

  std::optional<bool> value(const Atom& a) const {
    auto it = observed.find(a);
    if (it == observed.end()) return std::nullopt;
    return it->second;
  }
  bool operator==(const PartialModel&) const = default;
};

enum class TruthValue3 { True, False, Unknown };

std::set<Name> names_of(const PartialModel& n);

// true iff every observed atom of n agrees with m
bool consistent(const PartialModel& n, const WorldModel& m);

// classical two-valued truth
bool evaluate(const GroundFormula& phi, const WorldModel& m);
bool evaluate(const GroundClause& c, const WorldModel& m);

TruthValue3 witness_eval(const GroundFormula& phi, const PartialModel& n);
TruthValue3 witness_eval(const GroundClause& c, const PartialModel& n);

// A forall-clause is witnessed true over C iff every binding of its vars to
// names in C whose guard holds yields a body clause witnessed true.
// Guard-failing bindings are vacuously satisfied.
bool witness_forall(const ForallClause& c, const PartialModel& n,
                    const std::set<Name>& names);

// phi with witnessed atoms replaced by constants; with fold=true the result
// is constant-folded (true & psi -> psi, etc.), which preserves semantics.
GroundFormula restrict_formula(const GroundFormula& phi, const PartialModel& n,
                               bool fold = true);

struct RestrictedClauses {
  std::set<GroundClause> clauses;
  bool falsum = false;  // some clause restricted to the empty clause
};

// Per clause: dropped when a literal is witnessed true, witnessed-false
// literals removed otherwise; an emptied clause sets the falsum flag (the
// empty clause is also kept in the set).
RestrictedClauses restrict_clauses(const std::set<GroundClause>& s,
                                   const PartialModel& n);

// JSON model files. A partial-model file holds one example per line, each a
// JSON object mapping printed ground atoms to 0/1. World objects are the
// same plus an optional "_default": 0|1 key.
PartialModel partial_model_from_json(const std::string& json_object);
std::string to_json(const PartialModel& n);
WorldModel world_model_from_json(const std::string& json_object);
std::string to_json(const WorldModel& m);
std::vector<PartialModel> load_examples(const std::string& path);

}  // namespace pacfol
