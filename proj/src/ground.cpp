#include "pacfol/ground.hpp"

#include <algorithm>
#include <stdexcept>

#include "pacfol/print.hpp"

namespace pacfol {

GroundClause GroundClause::of(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return GroundClause{std::move(lits)};
}

bool GroundClause::contains(const Literal& l) const {
  return std::binary_search(lits.begin(), lits.end(), l);
}

bool GroundClause::tautological() const {
  for (const auto& l : lits)
    if (contains(l.negated())) return true;
  return false;
}

std::string print(const GroundClause& c) {
  if (c.lits.empty()) return "false";
  std::string s;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) s += " | ";
    s += print(c.lits[i]);
  }
  return s;
}

std::set<Name> names_of(const GroundClause& c) {
  std::set<Name> out;
  for (const auto& l : c.lits) {
    auto sub = names_of(l.atom);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<Atom> atoms_of(const GroundClause& c) {
  std::set<Atom> out;
  for (const auto& l : c.lits) out.insert(l.atom);
  return out;
}

std::set<Atom> atoms_of(const std::set<GroundClause>& cs) {
  std::set<Atom> out;
  for (const auto& c : cs)
    for (const auto& l : c.lits) out.insert(l.atom);
  return out;
}

bool eval_guard(const EqualityFormula& e, const Substitution& theta) {
  using K = EqualityFormula::Kind;
  switch (e.kind) {
    case K::True:
      return true;
    case K::Eq: {
      auto it = theta.find(e.var);
      if (it == theta.end())
        throw std::invalid_argument("unbound variable '" + e.var.id +
                                    "' in guard");
      return it->second == e.name;
    }
    case K::Not:
      return !eval_guard(e.kids[0], theta);
    case K::And: {
      // no short-circuit: unbound variables must surface either way
      bool a = eval_guard(e.kids[0], theta);
      bool b = eval_guard(e.kids[1], theta);
      return a && b;
    }
    case K::Or: {
      bool a = eval_guard(e.kids[0], theta);
      bool b = eval_guard(e.kids[1], theta);
      return a || b;
    }
  }
  return false;
}

Atom apply(const Atom& a, const Substitution& theta) {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) {
    if (const Variable* v = std::get_if<Variable>(&t)) {
      auto it = theta.find(*v);
      if (it == theta.end())
        throw std::invalid_argument("unbound variable '" + v->id + "'");
      out.args.emplace_back(it->second);
    } else {
      out.args.push_back(t);
    }
  }
  return out;
}

Literal apply(const Literal& l, const Substitution& theta) {
  return Literal{apply(l.atom, theta), l.positive};
}

GroundClause apply(const ForallClause& c, const Substitution& theta) {
  std::vector<Literal> lits;
  lits.reserve(c.body.size());
  for (const auto& l : c.body) lits.push_back(apply(l, theta));
  return GroundClause::of(std::move(lits));
}

std::set<GroundClause> gnd_with_names(const ProperPlusKB& kb,
                                      const std::set<Name>& extra) {
  std::set<Name> universe = names_of(kb);
  universe.insert(extra.begin(), extra.end());
  std::vector<Name> z(universe.begin(), universe.end());

  std::set<GroundClause> out;
  for (const auto& clause : kb.clauses) {
    const size_t n = clause.vars.size();
    if (n == 0) {
      Substitution empty;
      if (eval_guard(clause.guard, empty)) out.insert(pacfol::apply(clause, empty));
      continue;
    }
    if (z.empty()) continue;  // no names, no bindings
    // odometer over Z^n, repetition allowed
    std::vector<size_t> idx(n, 0);
    for (;;) {
      Substitution theta;
      for (size_t i = 0; i < n; ++i) theta[clause.vars[i]] = z[idx[i]];
      if (eval_guard(clause.guard, theta)) out.insert(pacfol::apply(clause, theta));
      size_t i = 0;
      while (i < n && ++idx[i] == z.size()) idx[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

std::vector<Name> fresh_names(const std::set<Name>& avoid, size_t count) {
  std::vector<Name> out;
  for (size_t i = 1; out.size() < count; ++i) {
    Name candidate{"_f" + std::to_string(i)};
    if (!avoid.count(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

std::set<GroundClause> gnd_z(const ProperPlusKB& kb, size_t z) {
  auto fresh = fresh_names(names_of(kb), z);
  return gnd_with_names(kb, std::set<Name>(fresh.begin(), fresh.end()));
}

GroundTask gnd_minus(const ProperPlusKB& kb, const GroundFormula& alpha) {
  return gnd_minus(kb, alpha, kb.rank());
}

GroundTask gnd_minus(const ProperPlusKB& kb, const GroundFormula& alpha,
                     size_t extra) {
  std::set<Name> base = names_of(kb);
  auto qnames = names_of(alpha);
  base.insert(qnames.begin(), qnames.end());
  auto fresh = fresh_names(base, extra);

  GroundTask task;
  task.name_universe = base;
  task.name_universe.insert(fresh.begin(), fresh.end());
  std::set<Name> c = qnames;
  c.insert(fresh.begin(), fresh.end());
  task.kb_clauses = gnd_with_names(kb, c);
  task.negated_query = GroundFormula::neg(alpha);
  return task;
}

}  // namespace pacfol
