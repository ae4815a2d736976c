#pragma once

#include <string>

#include "pacfol/ast.hpp"

namespace pacfol {

// Canonical printing. parse(print(x)) reproduces x structurally.
std::string print(const Term& t);
std::string print(const Atom& a);
std::string print(const Literal& l);
std::string print(const EqualityFormula& e);
std::string print(const ForallClause& c);
std::string print(const ProperPlusKB& kb);
std::string print(const GroundFormula& f);

}  // namespace pacfol
