#include "pacfol/limited.hpp"

#include <algorithm>
#include <functional>

namespace pacfol {

ClauseStore ClauseStore::of(std::set<GroundClause> clauses) {
  ClauseStore s;
  s.falsum = clauses.count(GroundClause{}) > 0;
  s.clauses = std::move(clauses);
  return s;
}

void ClauseStore::insert(GroundClause c) {
  if (c.empty()) falsum = true;
  clauses.insert(std::move(c));
}

ClauseStore up_closure(const ClauseStore& s) {
  ClauseStore out = s;
  // literal -> clauses containing it, rebuilt as clauses are derived
  std::map<Literal, std::vector<const GroundClause*>> index;
  std::vector<Literal> unit_queue;
  std::set<Literal> seen_units;

  std::function<void(const GroundClause&)> add_clause =
      [&](const GroundClause& c) {
    auto [it, inserted] = out.clauses.insert(c);
    if (!inserted) return;
    if (c.empty()) out.falsum = true;
    for (const auto& l : it->lits) index[l].push_back(&*it);
    if (c.lits.size() == 1 && seen_units.insert(c.lits[0]).second)
      unit_queue.push_back(c.lits[0]);
    // resolve against units that were already processed
    for (const auto& l : it->lits)
      if (seen_units.count(l.negated())) {
        std::vector<Literal> rest;
        for (const auto& cl : it->lits)
          if (!(cl == l)) rest.push_back(cl);
        add_clause(GroundClause::of(std::move(rest)));
      }
  };

  out.clauses.clear();
  out.falsum = s.falsum;
  for (const auto& c : s.clauses) add_clause(c);

  while (!unit_queue.empty()) {
    Literal l = unit_queue.back();
    unit_queue.pop_back();
    Literal neg = l.negated();
    auto it = index.find(neg);
    if (it == index.end()) continue;
    // the vector may grow while we derive; iterate by index
    for (size_t i = 0; i < it->second.size(); ++i) {
      const GroundClause* c = it->second[i];
      std::vector<Literal> rest;
      rest.reserve(c->lits.size() - 1);
      for (const auto& cl : c->lits)
        if (!(cl == neg)) rest.push_back(cl);
      add_clause(GroundClause::of(std::move(rest)));
    }
  }
  return out;
}

bool subsumed(const GroundClause& phi, const ClauseStore& u) {
  if (u.falsum) return true;
  for (const auto& c : u.clauses) {
    if (c.lits.size() > phi.lits.size()) continue;
    if (std::includes(phi.lits.begin(), phi.lits.end(), c.lits.begin(),
                      c.lits.end()))
      return true;
  }
  return false;
}

namespace {

struct SplitContext {
  const GroundClause* phi;
  // memo on the set of split-added units: within one query the base store
  // is fixed, so added units identify the store
  std::map<std::pair<std::set<Literal>, int>, bool> memo;

  bool run(const ClauseStore& s, const std::set<Literal>& added, int z) {
    auto key = std::make_pair(added, z);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool result = decide(s, added, z);
    memo.emplace(std::move(key), result);
    return result;
  }

  bool decide(const ClauseStore& s, const std::set<Literal>& added, int z) {
    ClauseStore u = up_closure(s);
    if (subsumed(*phi, u)) return true;
    if (z == 0) return false;

    // split clause order: ascending size, then lexicographic; unit clauses
    // are skipped (the branch store would be unchanged)
    std::vector<const GroundClause*> candidates;
    for (const auto& c : s.clauses)
      if (c.lits.size() > 1) candidates.push_back(&c);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const GroundClause* a, const GroundClause* b) {
                       if (a->lits.size() != b->lits.size())
                         return a->lits.size() < b->lits.size();
                       return *a < *b;
                     });
    for (const GroundClause* c : candidates) {
      bool all = true;
      for (const auto& l : c->lits) {
        ClauseStore branch = s;
        branch.insert(GroundClause::of({l}));
        std::set<Literal> branch_added = added;
        branch_added.insert(l);
        if (!run(branch, branch_added, z - 1)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }
};

}  // namespace

bool entails_z(const ClauseStore& s, const GroundClause& phi, int z) {
  if (z < 0) throw std::invalid_argument("entails_z: negative level");
  SplitContext ctx;
  ctx.phi = &phi;
  return ctx.run(s, {}, z);
}

bool entails_z_formula(const ClauseStore& s, const GroundFormula& phi, int z,
                       const SatConfig& cfg) {
  if (atoms_of(phi).size() > cfg.direct_cnf_max_atoms)
    throw ResourceLimitError("query exceeds the direct-CNF atom budget");
  auto conjuncts = to_cnf_exact(phi, cfg.direct_cnf_max_clauses);
  for (const auto& c : conjuncts)
    if (!entails_z(s, c, z)) return false;
  return true;
}

}  // namespace pacfol
