#include "pacfol/model.hpp"

#include <fstream>
#include <json.hpp>

#include "pacfol/parse.hpp"
#include "pacfol/print.hpp"

namespace pacfol {

std::set<Name> names_of(const PartialModel& n) {
  std::set<Name> out;
  for (const auto& [atom, _] : n.observed) {
    auto sub = names_of(atom);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool consistent(const PartialModel& n, const WorldModel& m) {
  for (const auto& [atom, val] : n.observed)
    if (m.value(atom) != val) return false;
  return true;
}

bool evaluate(const GroundFormula& phi, const WorldModel& m) {
  using K = GroundFormula::Kind;
  switch (phi.kind) {
    case K::Constant:
      return phi.value;
    case K::AtomKind:
      return m.value(phi.atom);
    case K::Not:
      return !evaluate(phi.kids[0], m);
    case K::And:
      return evaluate(phi.kids[0], m) && evaluate(phi.kids[1], m);
    case K::Or:
      return evaluate(phi.kids[0], m) || evaluate(phi.kids[1], m);
    case K::Implies:
      return !evaluate(phi.kids[0], m) || evaluate(phi.kids[1], m);
  }
  return false;
}

bool evaluate(const GroundClause& c, const WorldModel& m) {
  for (const auto& l : c.lits)
    if (m.value(l.atom) == l.positive) return true;
  return false;
}

namespace {

TruthValue3 neg3(TruthValue3 v) {
  switch (v) {
    case TruthValue3::True:
      return TruthValue3::False;
    case TruthValue3::False:
      return TruthValue3::True;
    default:
      return TruthValue3::Unknown;
  }
}

TruthValue3 or3(TruthValue3 a, TruthValue3 b) {
  if (a == TruthValue3::True || b == TruthValue3::True)
    return TruthValue3::True;
  if (a == TruthValue3::False && b == TruthValue3::False)
    return TruthValue3::False;
  return TruthValue3::Unknown;
}

TruthValue3 and3(TruthValue3 a, TruthValue3 b) { return neg3(or3(neg3(a), neg3(b))); }

}  // namespace

TruthValue3 witness_eval(const GroundFormula& phi, const PartialModel& n) {
  using K = GroundFormula::Kind;
  switch (phi.kind) {
    case K::Constant:
      return phi.value ? TruthValue3::True : TruthValue3::False;
    case K::AtomKind: {
      auto v = n.value(phi.atom);
      if (!v) return TruthValue3::Unknown;
      return *v ? TruthValue3::True : TruthValue3::False;
    }
    case K::Not:
      return neg3(witness_eval(phi.kids[0], n));
    case K::And:
      return and3(witness_eval(phi.kids[0], n), witness_eval(phi.kids[1], n));
    case K::Or:
      return or3(witness_eval(phi.kids[0], n), witness_eval(phi.kids[1], n));
    case K::Implies:
      return or3(neg3(witness_eval(phi.kids[0], n)),
                 witness_eval(phi.kids[1], n));
  }
  return TruthValue3::Unknown;
}

TruthValue3 witness_eval(const GroundClause& c, const PartialModel& n) {
  bool unknown = false;
  for (const auto& l : c.lits) {
    auto v = n.value(l.atom);
    if (!v)
      unknown = true;
    else if (*v == l.positive)
      return TruthValue3::True;
  }
  return unknown ? TruthValue3::Unknown : TruthValue3::False;
}

bool witness_forall(const ForallClause& c, const PartialModel& n,
                    const std::set<Name>& names) {
  const size_t k = c.vars.size();
  if (k == 0) {
    Substitution empty;
    if (!eval_guard(c.guard, empty)) return true;
    return witness_eval(pacfol::apply(c, empty), n) == TruthValue3::True;
  }
  if (names.empty())
    throw std::invalid_argument(
        "witness_forall: empty name set for a clause with variables");
  std::vector<Name> z(names.begin(), names.end());
  std::vector<size_t> idx(k, 0);
  for (;;) {
    Substitution theta;
    for (size_t i = 0; i < k; ++i) theta[c.vars[i]] = z[idx[i]];
    if (eval_guard(c.guard, theta) &&
        witness_eval(pacfol::apply(c, theta), n) != TruthValue3::True)
      return false;
    size_t i = 0;
    while (i < k && ++idx[i] == z.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return true;
}

namespace {

GroundFormula fold_node(GroundFormula f) {
  using K = GroundFormula::Kind;
  auto is_const = [](const GroundFormula& g, bool v) {
    return g.kind == K::Constant && g.value == v;
  };
  switch (f.kind) {
    case K::Not:
      if (f.kids[0].kind == K::Constant)
        return GroundFormula::constant(!f.kids[0].value);
      return f;
    case K::And:
      if (is_const(f.kids[0], false) || is_const(f.kids[1], false))
        return GroundFormula::constant(false);
      if (is_const(f.kids[0], true)) return f.kids[1];
      if (is_const(f.kids[1], true)) return f.kids[0];
      return f;
    case K::Or:
      if (is_const(f.kids[0], true) || is_const(f.kids[1], true))
        return GroundFormula::constant(true);
      if (is_const(f.kids[0], false)) return f.kids[1];
      if (is_const(f.kids[1], false)) return f.kids[0];
      return f;
    case K::Implies:
      if (is_const(f.kids[0], false) || is_const(f.kids[1], true))
        return GroundFormula::constant(true);
      if (is_const(f.kids[0], true)) return f.kids[1];
      if (is_const(f.kids[1], false))
        return fold_node(GroundFormula::neg(f.kids[0]));
      return f;
    default:
      return f;
  }
}

}  // namespace

GroundFormula restrict_formula(const GroundFormula& phi, const PartialModel& n,
                               bool fold) {
  using K = GroundFormula::Kind;
  if (phi.kind == K::AtomKind) {
    auto v = n.value(phi.atom);
    return v ? GroundFormula::constant(*v) : phi;
  }
  if (phi.kind == K::Constant) return phi;
  GroundFormula out;
  out.kind = phi.kind;
  for (const auto& k : phi.kids)
    out.kids.push_back(restrict_formula(k, n, fold));
  return fold ? fold_node(std::move(out)) : out;
}

RestrictedClauses restrict_clauses(const std::set<GroundClause>& s,
                                   const PartialModel& n) {
  RestrictedClauses out;
  for (const auto& c : s) {
    std::vector<Literal> kept;
    bool satisfied = false;
    for (const auto& l : c.lits) {
      auto v = n.value(l.atom);
      if (!v)
        kept.push_back(l);
      else if (*v == l.positive) {
        satisfied = true;
        break;
      }
      // witnessed-false literal: dropped
    }
    if (satisfied) continue;
    if (kept.empty()) out.falsum = true;
    out.clauses.insert(GroundClause::of(std::move(kept)));
  }
  return out;
}

PartialModel partial_model_from_json(const std::string& json_object) {
  nlohmann::json j = nlohmann::json::parse(json_object);
  if (!j.is_object()) throw ParseError("partial model must be a JSON object");
  PartialModel n;
  for (auto& [key, val] : j.items()) {
    if (!val.is_number_integer() || (val != 0 && val != 1))
      throw ParseError("value for '" + key + "' must be 0 or 1");
    n.observed[parse_ground_atom(key)] = (val == 1);
  }
  return n;
}

std::string to_json(const PartialModel& n) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [atom, val] : n.observed) j[print(atom)] = val ? 1 : 0;
  return j.dump();
}

WorldModel world_model_from_json(const std::string& json_object) {
  nlohmann::json j = nlohmann::json::parse(json_object);
  if (!j.is_object()) throw ParseError("world model must be a JSON object");
  WorldModel m;
  for (auto& [key, val] : j.items()) {
    if (!val.is_number_integer() || (val != 0 && val != 1))
      throw ParseError("value for '" + key + "' must be 0 or 1");
    if (key == "_default") {
      m.default_value = (val == 1);
      continue;
    }
    m.assignment[parse_ground_atom(key)] = (val == 1);
  }
  return m;
}

std::string to_json(const WorldModel& m) {
  nlohmann::json j = nlohmann::json::object();
  j["_default"] = m.default_value ? 1 : 0;
  for (const auto& [atom, val] : m.assignment) j[print(atom)] = val ? 1 : 0;
  return j.dump();
}

std::vector<PartialModel> load_examples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open examples file: " + path);
  std::vector<PartialModel> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(partial_model_from_json(line));
    } catch (const std::exception& e) {
      throw ParseError(std::string("examples file ") + path + ": " + e.what(),
                       lineno);
    }
  }
  return out;
}

}  // namespace pacfol
