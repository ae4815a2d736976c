#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pacfol/ground.hpp"
#include "pacfol/harness.hpp"
#include "pacfol/model.hpp"
#include "pacfol/sat.hpp"

// Deterministic generators and brute-force oracles shared by the unit and
// acceptance suites. Everything draws from a pacfol::Rng so failures replay
// from the seed alone.
namespace testutil {

using namespace pacfol;

inline std::vector<Atom> atom_list(const std::set<GroundClause>& cs,
                                   const GroundFormula& extra) {
  std::set<Atom> s = atoms_of(cs);
  for (const Atom& a : atoms_of(extra)) s.insert(a);
  return {s.begin(), s.end()};
}

// Exhaustive truth-table satisfiability over the instance's atoms.
inline bool brute_satisfiable(const std::set<GroundClause>& cs,
                              const GroundFormula& extra) {
  std::vector<Atom> atoms = atom_list(cs, extra);
  const size_t n = atoms.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    WorldModel m;
    for (size_t i = 0; i < n; ++i) m.assignment[atoms[i]] = (mask >> i) & 1;
    bool ok = evaluate(extra, m);
    for (auto it = cs.begin(); ok && it != cs.end(); ++it)
      ok = evaluate(*it, m);
    if (ok) return true;
  }
  return false;
}

inline bool brute_entails(const ProperPlusKB& kb, const GroundFormula& alpha) {
  GroundTask task = gnd_minus(kb, alpha);
  return !brute_satisfiable(task.kb_clauses, task.negated_query);
}

// All total completions of n over exactly `atoms`.
inline std::vector<WorldModel> completions(const PartialModel& n,
                                           const std::vector<Atom>& atoms) {
  std::vector<Atom> free;
  for (const Atom& a : atoms)
    if (!n.value(a)) free.push_back(a);
  std::vector<WorldModel> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << free.size()); ++mask) {
    WorldModel m;
    for (const auto& [a, v] : n.observed) m.assignment[a] = v;
    for (size_t i = 0; i < free.size(); ++i)
      m.assignment[free[i]] = (mask >> i) & 1;
    out.push_back(std::move(m));
  }
  return out;
}

// Small-vocabulary random instances: <=2 predicates of arity <=2, names
// drawn from {a,b,c,d}, variables from {x,y}.
struct Gen {
  Rng rng;
  std::vector<std::pair<std::string, size_t>> vocab;
  std::vector<Name> names{{"a"}, {"b"}, {"c"}, {"d"}};

  explicit Gen(uint64_t seed) : rng(seed) {
    vocab = {{"P", 1 + rng.below(2)}, {"Q", 1 + rng.below(2)}};
  }

  Name name() { return names[rng.below(names.size())]; }

  Term term(const std::vector<Variable>& vars) {
    if (!vars.empty() && rng.bernoulli(0.6))
      return vars[rng.below(vars.size())];
    return name();
  }

  Atom atom(const std::vector<Variable>& vars) {
    const auto& [pred, arity] = vocab[rng.below(vocab.size())];
    Atom a{pred, {}};
    for (size_t i = 0; i < arity; ++i) a.args.push_back(term(vars));
    return a;
  }

  Atom ground_atom() { return atom({}); }

  EqualityFormula guard(const std::vector<Variable>& vars, int depth) {
    if (vars.empty()) return EqualityFormula::truth();
    if (depth == 0 || rng.bernoulli(0.5)) {
      EqualityFormula e =
          EqualityFormula::eq(vars[rng.below(vars.size())], name());
      return rng.bernoulli(0.4) ? EqualityFormula::neg(e) : e;
    }
    EqualityFormula a = guard(vars, depth - 1);
    EqualityFormula b = guard(vars, depth - 1);
    return rng.bernoulli(0.5) ? EqualityFormula::conj(a, b)
                              : EqualityFormula::disj(a, b);
  }

  ForallClause clause(size_t max_rank) {
    std::vector<Variable> vars;
    size_t r = rng.below(max_rank + 1);
    if (r >= 1) vars.push_back(Variable{"x"});
    if (r >= 2) vars.push_back(Variable{"y"});
    ForallClause c;
    c.vars = vars;
    c.guard = rng.bernoulli(0.5) ? EqualityFormula::truth() : guard(vars, 1);
    size_t lits = 1 + rng.below(3);
    for (size_t i = 0; i < lits; ++i)
      c.body.push_back(Literal{atom(vars), rng.bernoulli(0.7)});
    return c;
  }

  ProperPlusKB kb(size_t max_clauses, size_t max_rank) {
    ProperPlusKB out;
    size_t n = 1 + rng.below(max_clauses);
    for (size_t i = 0; i < n; ++i) out.clauses.push_back(clause(max_rank));
    return out;
  }

  GroundFormula formula(int depth) {
    if (depth == 0 || rng.bernoulli(0.3)) {
      if (rng.bernoulli(0.1)) return GroundFormula::constant(rng.bernoulli(0.5));
      return GroundFormula::make(ground_atom());
    }
    switch (rng.below(4)) {
      case 0: return GroundFormula::neg(formula(depth - 1));
      case 1: return GroundFormula::conj(formula(depth - 1), formula(depth - 1));
      case 2: return GroundFormula::disj(formula(depth - 1), formula(depth - 1));
      default:
        return GroundFormula::implies(formula(depth - 1), formula(depth - 1));
    }
  }

  GroundClause ground_clause(size_t max_lits) {
    std::vector<Literal> lits;
    size_t n = 1 + rng.below(max_lits);
    for (size_t i = 0; i < n; ++i)
      lits.push_back(Literal{ground_atom(), rng.bernoulli(0.5)});
    return GroundClause::of(std::move(lits));
  }

  std::set<GroundClause> clause_set(size_t max_clauses, size_t max_lits) {
    std::set<GroundClause> out;
    size_t n = 1 + rng.below(max_clauses);
    for (size_t i = 0; i < n; ++i) out.insert(ground_clause(max_lits));
    return out;
  }

  // observes each listed atom with probability obs
  PartialModel partial(const std::vector<Atom>& atoms, double obs) {
    PartialModel n;
    for (const Atom& a : atoms)
      if (rng.bernoulli(obs)) n.observed[a] = rng.bernoulli(0.5);
    return n;
  }
};

}  // namespace testutil
