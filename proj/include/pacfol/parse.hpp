#pragma once

#include <string>

#include "pacfol/ast.hpp"

namespace pacfol {

struct ParseOptions {
  // Reject negated atoms in clause bodies (strict disjunction-of-atoms mode).
  bool positive_only = false;
};

// KB grammar, one clause per line, '#' comments:
//   clause   := "forall" varlist? ":" (eqform "=>")? body
//   varlist  := ident ("," ident)*
//   eqform   := eqatom | "!" eqform | "(" eqform ")" | eqform "&" eqform
//             | eqform "|" eqform
//   eqatom   := var "=" name | var "!=" name
//   body     := literal ("|" literal)*
//   literal  := "!"? pred ("(" term ("," term)* ")")?
// Predicates start with an uppercase letter; names are lowercase/digit/
// underscore tokens or number literals; "_"-prefixed tokens are reserved
// for generated fresh names. Variables are the tokens declared in the
// varlist. "forall", "true" and "false" are keywords.
ProperPlusKB parse_kb(const std::string& text, const ParseOptions& opts = {});

// Ground formula over literals, '&', '|', '!', '=>', parentheses, the
// constants true/false, and name (in)equalities, which are folded to
// constants during validation.
GroundFormula parse_query(const std::string& text);

// Single ground atom, e.g. "Grad(logan)". Used for model-file keys;
// reserved "_"-prefixed names are accepted here.
Atom parse_ground_atom(const std::string& text);

// Throws ParseError when a predicate is used with conflicting arities
// across the KB and the query.
void check_arities(const ProperPlusKB& kb, const GroundFormula& query);

}  // namespace pacfol
