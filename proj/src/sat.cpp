#include "pacfol/sat.hpp"

#include <algorithm>

#include "pacfol/print.hpp"

namespace pacfol {

namespace {

// negation normal form over {atom, and, or}; constants already folded away
GroundFormula nnf(const GroundFormula& phi, bool positive) {
  using K = GroundFormula::Kind;
  switch (phi.kind) {
    case K::Constant:
      return GroundFormula::constant(positive == phi.value);
    case K::AtomKind:
      return positive ? phi : GroundFormula::neg(phi);
    case K::Not:
      return nnf(phi.kids[0], !positive);
    case K::And:
      if (positive)
        return GroundFormula::conj(nnf(phi.kids[0], true),
                                   nnf(phi.kids[1], true));
      return GroundFormula::disj(nnf(phi.kids[0], false),
                                 nnf(phi.kids[1], false));
    case K::Or:
      if (positive)
        return GroundFormula::disj(nnf(phi.kids[0], true),
                                   nnf(phi.kids[1], true));
      return GroundFormula::conj(nnf(phi.kids[0], false),
                                 nnf(phi.kids[1], false));
    case K::Implies:
      if (positive)
        return GroundFormula::disj(nnf(phi.kids[0], false),
                                   nnf(phi.kids[1], true));
      return GroundFormula::conj(nnf(phi.kids[0], true),
                                 nnf(phi.kids[1], false));
  }
  return GroundFormula::constant(false);
}

Literal literal_of(const GroundFormula& f) {
  using K = GroundFormula::Kind;
  if (f.kind == K::AtomKind) return Literal{f.atom, true};
  return Literal{f.kids[0].atom, false};  // Not over an atom, by NNF shape
}

bool is_literal(const GroundFormula& f) {
  using K = GroundFormula::Kind;
  return f.kind == K::AtomKind ||
         (f.kind == K::Not && f.kids[0].kind == K::AtomKind);
}

// distributive CNF of an NNF formula
std::vector<GroundClause> cnf_distribute(const GroundFormula& f,
                                         size_t max_clauses) {
  using K = GroundFormula::Kind;
  if (f.kind == K::Constant) {
    if (f.value) return {};
    return {GroundClause{}};
  }
  if (is_literal(f)) return {GroundClause::of({literal_of(f)})};
  if (f.kind == K::And) {
    auto a = cnf_distribute(f.kids[0], max_clauses);
    auto b = cnf_distribute(f.kids[1], max_clauses);
    a.insert(a.end(), b.begin(), b.end());
    if (a.size() > max_clauses)
      throw ResourceLimitError("direct CNF conversion exceeded clause cap");
    return a;
  }
  // Or
  auto a = cnf_distribute(f.kids[0], max_clauses);
  auto b = cnf_distribute(f.kids[1], max_clauses);
  std::vector<GroundClause> out;
  for (const auto& ca : a)
    for (const auto& cb : b) {
      std::vector<Literal> lits = ca.lits;
      lits.insert(lits.end(), cb.lits.begin(), cb.lits.end());
      GroundClause c = GroundClause::of(std::move(lits));
      if (!c.tautological()) out.push_back(std::move(c));
      if (out.size() > max_clauses)
        throw ResourceLimitError("direct CNF conversion exceeded clause cap");
    }
  return out;
}

struct TseitinContext {
  std::set<GroundClause>* out;
  int counter = 0;

  Literal fresh() {
    Atom a;
    a.pred = "_t" + std::to_string(++counter);
    return Literal{std::move(a), true};
  }

  // returns a literal equivalent to f (NNF, no constants below the root)
  Literal encode(const GroundFormula& f) {
    using K = GroundFormula::Kind;
    if (is_literal(f)) return literal_of(f);
    Literal la = encode(f.kids[0]);
    Literal lb = encode(f.kids[1]);
    Literal t = fresh();
    if (f.kind == K::And) {
      out->insert(GroundClause::of({t.negated(), la}));
      out->insert(GroundClause::of({t.negated(), lb}));
      out->insert(GroundClause::of({t, la.negated(), lb.negated()}));
    } else {  // Or
      out->insert(GroundClause::of({t.negated(), la, lb}));
      out->insert(GroundClause::of({t, la.negated()}));
      out->insert(GroundClause::of({t, lb.negated()}));
    }
    return t;
  }
};

// folds constants bottom-up; result is a constant or constant-free
GroundFormula simplify_constants(const GroundFormula& phi) {
  return restrict_formula(phi, PartialModel{}, /*fold=*/true);
}

class Dpll {
 public:
  Dpll(std::vector<std::vector<int>> clauses, size_t nvars, uint64_t cap)
      : clauses_(std::move(clauses)), nvars_(nvars), cap_(cap) {}

  std::optional<std::vector<int8_t>> solve() {
    std::vector<int8_t> assign(nvars_, -1);
    if (search(assign)) return model_;
    return std::nullopt;
  }

 private:
  void step() {
    if (++steps_ > cap_) throw ResourceLimitError("SAT step cap exceeded");
  }

  static bool lit_true(const std::vector<int8_t>& a, int lit) {
    int v = a[std::abs(lit) - 1];
    return v >= 0 && (v == 1) == (lit > 0);
  }
  static bool lit_false(const std::vector<int8_t>& a, int lit) {
    int v = a[std::abs(lit) - 1];
    return v >= 0 && (v == 1) != (lit > 0);
  }

  // returns false on conflict
  bool propagate(std::vector<int8_t>& a) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        int unit = 0;
        bool sat = false;
        for (int lit : c) {
          if (lit_true(a, lit)) {
            sat = true;
            break;
          }
          if (!lit_false(a, lit)) {
            ++unassigned;
            unit = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          step();
          a[std::abs(unit) - 1] = unit > 0 ? 1 : 0;
          changed = true;
        }
      }
    }
    return true;
  }

  void assign_pure(std::vector<int8_t>& a) {
    std::vector<int8_t> polarity(nvars_, 0);  // bit0 pos, bit1 neg
    for (const auto& c : clauses_) {
      bool sat = false;
      for (int lit : c)
        if (lit_true(a, lit)) {
          sat = true;
          break;
        }
      if (sat) continue;
      for (int lit : c) {
        if (lit_false(a, lit)) continue;
        polarity[std::abs(lit) - 1] |= lit > 0 ? 1 : 2;
      }
    }
    for (size_t v = 0; v < nvars_; ++v) {
      if (a[v] >= 0) continue;
      if (polarity[v] == 1) {
        step();
        a[v] = 1;
      } else if (polarity[v] == 2) {
        step();
        a[v] = 0;
      }
    }
  }

  bool all_satisfied(const std::vector<int8_t>& a) const {
    for (const auto& c : clauses_) {
      bool sat = false;
      for (int lit : c)
        if (lit_true(a, lit)) {
          sat = true;
          break;
        }
      if (!sat) return false;
    }
    return true;
  }

  bool search(std::vector<int8_t> a) {
    if (!propagate(a)) return false;
    assign_pure(a);
    if (!propagate(a)) return false;
    if (all_satisfied(a)) {
      model_ = a;
      return true;
    }
    size_t v = 0;
    while (v < nvars_ && a[v] >= 0) ++v;
    if (v == nvars_) return false;  // fully assigned yet unsatisfied
    for (int8_t val : {int8_t{0}, int8_t{1}}) {
      step();
      std::vector<int8_t> branch = a;
      branch[v] = val;
      if (search(std::move(branch))) return true;
    }
    return false;
  }

  std::vector<std::vector<int>> clauses_;
  size_t nvars_;
  uint64_t cap_;
  uint64_t steps_ = 0;
  std::vector<int8_t> model_;
};

bool is_aux(const Atom& a) { return !a.pred.empty() && a.pred[0] == '_'; }

}  // namespace

std::set<GroundClause> to_cnf_exact(const GroundFormula& phi,
                                    size_t max_clauses) {
  GroundFormula f = nnf(simplify_constants(phi), true);
  auto clauses = cnf_distribute(f, max_clauses);
  return {clauses.begin(), clauses.end()};
}

std::set<GroundClause> to_clauses(const GroundFormula& phi,
                                  const SatConfig& cfg) {
  GroundFormula f = simplify_constants(phi);
  if (atoms_of(f).size() <= cfg.direct_cnf_max_atoms) {
    try {
      return to_cnf_exact(f, cfg.direct_cnf_max_clauses);
    } catch (const ResourceLimitError&) {
      // fall through to Tseitin
    }
  }
  std::set<GroundClause> out;
  if (f.kind == GroundFormula::Kind::Constant) {
    if (!f.value) out.insert(GroundClause{});
    return out;
  }
  GroundFormula n = nnf(f, true);
  TseitinContext ctx{&out};
  out.insert(GroundClause::of({ctx.encode(n)}));
  return out;
}

SatResult satisfiable(const PropInstance& inst, const SatConfig& cfg) {
  std::set<GroundClause> clauses = inst.clauses;
  auto extra_clauses = to_clauses(inst.extra, cfg);
  clauses.insert(extra_clauses.begin(), extra_clauses.end());

  // atom table in canonical order; branching picks the least index first
  std::set<Atom> atoms = atoms_of(clauses);
  std::vector<Atom> order(atoms.begin(), atoms.end());
  std::map<Atom, int> index;
  for (size_t i = 0; i < order.size(); ++i) index[order[i]] = int(i);

  std::vector<std::vector<int>> enc;
  enc.reserve(clauses.size());
  for (const auto& c : clauses) {
    if (c.empty()) return {SatStatus::Unsat, std::nullopt};
    std::vector<int> lits;
    lits.reserve(c.lits.size());
    for (const auto& l : c.lits) {
      int v = index.at(l.atom) + 1;
      lits.push_back(l.positive ? v : -v);
    }
    enc.push_back(std::move(lits));
  }

  Dpll solver(std::move(enc), order.size(), cfg.step_cap);
  auto model = solver.solve();
  if (!model) return {SatStatus::Unsat, std::nullopt};

  WorldModel full;
  for (size_t i = 0; i < order.size(); ++i)
    full.assignment[order[i]] = (*model)[i] == 1;  // unassigned default false
  for (const auto& c : clauses)
    if (!evaluate(c, full))
      throw std::logic_error("SAT model fails verification: " + print(c));
  if (!evaluate(inst.extra, full))
    throw std::logic_error("SAT model fails the extra formula");

  WorldModel reported;
  for (const auto& [atom, val] : full.assignment)
    if (!is_aux(atom)) reported.assignment[atom] = val;
  return {SatStatus::Sat, std::move(reported)};
}

SatResult check_entails(const ProperPlusKB& kb, const GroundFormula& alpha,
                        const SatConfig& cfg) {
  GroundTask task = gnd_minus(kb, alpha);
  return satisfiable({task.kb_clauses, task.negated_query}, cfg);
}

bool entails(const ProperPlusKB& kb, const GroundFormula& alpha,
             const SatConfig& cfg) {
  return check_entails(kb, alpha, cfg).status == SatStatus::Unsat;
}

}  // namespace pacfol
