// Acceptance gate: one line per criterion, PASS/FAIL (criterion 10 may WARN).
#include <chrono>
#include <cstdio>
#include <functional>

#include "pacfol/harness.hpp"
#include "pacfol/implicit.hpp"
#include "pacfol/limited.hpp"
#include "pacfol/parse.hpp"
#include "pacfol/sat.hpp"
#include "testutil.hpp"

using namespace pacfol;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::printf("%s: criterion %2d - %s%s%s\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Paper example, both directions, verified countermodel, < 1 s.
void criterion1() {
  auto t0 = Clock::now();
  ProperPlusKB kb = parse_kb(
      "forall x: Grad(x) | Prof(x)\n"
      "forall x: x != charles => Grad(x)\n");
  GroundFormula alpha = parse_query("Grad(logan)");
  bool ok = entails(kb, alpha);

  ProperPlusKB weak = parse_kb("forall x: Grad(x) | Prof(x)");
  SatResult r = check_entails(weak, alpha);
  ok = ok && r.status == SatStatus::Sat && r.model.has_value();
  if (ok) {
    GroundTask task = gnd_minus(weak, alpha);
    for (const GroundClause& c : task.kb_clauses)
      ok = ok && evaluate(c, *r.model);
    ok = ok && !evaluate(alpha, *r.model);
  }
  double dt = seconds_since(t0);
  report(1, ok && dt < 1.0, "paper example entailment + countermodel",
         "runtime " + std::to_string(dt) + " s");
}

// 2. 1000 random (kb, alpha) vs exhaustive truth-table enumeration, < 60 s.
void criterion2() {
  auto t0 = Clock::now();
  int mismatches = 0, done = 0;
  for (uint64_t seed = 0; done < 1000; ++seed) {
    testutil::Gen gen(seed);
    ProperPlusKB kb = gen.kb(3, 2);
    GroundFormula alpha = gen.formula(2);
    GroundTask task = gnd_minus(kb, alpha);
    if (testutil::atom_list(task.kb_clauses, task.negated_query).size() > 16)
      continue;
    ++done;
    if (entails(kb, alpha) != testutil::brute_entails(kb, alpha))
      ++mismatches;
  }
  double dt = seconds_since(t0);
  report(2, mismatches == 0 && dt < 60.0, "grounding-trick oracle equivalence",
         std::to_string(mismatches) + " mismatches in 1000, " +
             std::to_string(dt) + " s");
}

// 3. Lemma: satisfiable rank-1 groundings extend to z = 2, 3.
void criterion3() {
  int violations = 0, done = 0;
  for (uint64_t seed = 0; done < 500; ++seed) {
    testutil::Gen gen(seed);
    ForallClause c = gen.clause(1);
    if (c.rank() != 1) continue;
    ++done;
    ProperPlusKB kb{{c}};
    auto sat_at = [&](size_t z) {
      return satisfiable({gnd_z(kb, z), GroundFormula::constant(true)})
                 .status == SatStatus::Sat;
    };
    if (!sat_at(1)) continue;
    if (!sat_at(2) || !sat_at(3)) ++violations;
  }
  report(3, violations == 0, "grounding-extension lemma",
         std::to_string(violations) + " violations in 500");
}

// 4. entails_z soundness against the sat module.
void criterion4() {
  int violations = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    testutil::Gen gen(seed);
    ClauseStore s = ClauseStore::of(gen.clause_set(4, 3));
    GroundClause phi = gen.ground_clause(3);
    int z = int(gen.rng.below(3));
    if (!entails_z(s, phi, z)) continue;
    auto with_neg = s.clauses;
    for (const Literal& l : phi.lits)
      with_neg.insert(GroundClause::of({l.negated()}));
    if (satisfiable({with_neg, GroundFormula::constant(true)}).status !=
        SatStatus::Unsat)
      ++violations;
  }
  report(4, violations == 0, "limited-entailment soundness",
         std::to_string(violations) + " violations in 1000");
}

// 5. Restriction closure of entails_z.
void criterion5() {
  int violations = 0;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    testutil::Gen gen(seed);
    auto cs = gen.clause_set(4, 3);
    GroundClause phi = gen.ground_clause(3);
    int z = int(gen.rng.below(3));
    if (!entails_z(ClauseStore::of(cs), phi, z)) continue;
    std::set<Atom> atom_set = atoms_of(cs);
    for (const Atom& a : atoms_of(phi)) atom_set.insert(a);
    std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    PartialModel n = gen.partial(atoms, 0.4);
    auto rs = restrict_clauses(cs, n);
    if (witness_eval(phi, n) == TruthValue3::True) continue;  // discharged
    std::vector<Literal> kept;
    for (const Literal& l : phi.lits)
      if (witness_eval(GroundClause::of({l}), n) != TruthValue3::False)
        kept.push_back(l);
    if (!entails_z(ClauseStore::of(rs.clauses), GroundClause::of(kept), z))
      ++violations;
  }
  report(5, violations == 0, "restriction closure of limited entailment",
         std::to_string(violations) + " violations in 500");
}

// 6. Witnessing/restriction soundness by exhaustive completion, <= 10 atoms.
void criterion6() {
  int violations = 0, formulas = 0;
  for (uint64_t seed = 0; formulas < 400; ++seed) {
    testutil::Gen gen(seed);
    GroundFormula phi = gen.formula(3);
    std::set<Atom> atom_set = atoms_of(phi);
    std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > 10) continue;
    ++formulas;
    PartialModel n = gen.partial(atoms, 0.5);
    TruthValue3 w = witness_eval(phi, n);
    GroundFormula r = restrict_formula(phi, n);
    for (const WorldModel& m : testutil::completions(n, atoms)) {
      if (w == TruthValue3::True && !evaluate(phi, m)) ++violations;
      if (w == TruthValue3::False && evaluate(phi, m)) ++violations;
      if (evaluate(r, m) != evaluate(phi, m)) ++violations;
    }
  }
  report(6, violations == 0, "witnessing and restriction soundness",
         std::to_string(violations) + " violations over 400 formulas");
}

// 7. Theorem-3 calibration on the planted Grad/Prof scenario.
void criterion7() {
  auto t0 = Clock::now();
  ProperPlusKB kb = parse_kb("forall x: Grad(x) | Prof(x)");
  GroundFormula alpha = parse_query("Grad(logan)");

  WorldDistributionSpec world;
  world.vocabulary = {{"Grad", 1}, {"Prof", 1}};
  world.names = {Name{"ana"}, Name{"bob"}, Name{"logan"}};
  // implicit KB forall x: !Prof(x) (with forall x: Grad(x)) lets the masked
  // examples witness the entailment; the violation recipe falsifies alpha
  // while keeping Delta true, so Delta => alpha is valid exactly when the
  // planted KB is satisfied
  world.mode = PlantedMode{
      parse_kb("forall x: !Prof(x)\nforall x: Grad(x)\n"),
      {0.8},
      {{{parse_ground_atom("Grad(logan)"), false},
        {parse_ground_atom("Prof(logan)"), true}}}};
  world.seed = 11;

  LearnConfig cfg;
  cfg.k = 1;
  CalibrationReport masked = run_calibration(
      world, {MaskIndependentHide{0.3}, 13}, kb, alpha, cfg, 0.1, 0.1, 200, 42);
  CalibrationReport full = run_calibration(
      world, {MaskIndependentHide{0.0}, 13}, kb, alpha, cfg, 0.1, 0.1, 200, 43);
  double dt = seconds_since(t0);
  bool ok = masked.fraction_sound >= 0.85 && full.fraction_complete >= 0.85 &&
            full.fraction_sound >= 0.85 && dt < 600.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "masked sound %.3f, full sound %.3f / complete %.3f, %.1f s",
                masked.fraction_sound, full.fraction_sound,
                full.fraction_complete, dt);
  report(7, ok, "Theorem-3 calibration", buf);
}

// 8. Algorithm 1 vs 1': limited mode at z = #atoms of the grounding matches
// SAT mode on incrementing examples and never exceeds it.
void criterion8() {
  int missed = 0, overshot = 0, done = 0;
  for (uint64_t seed = 0; done < 200; ++seed) {
    testutil::Gen gen(seed);
    ProperPlusKB kb = gen.kb(2, 1);
    GroundFormula alpha = GroundFormula::make(gen.ground_atom());
    GroundTask task = gnd_minus(kb, alpha);
    std::set<Atom> atom_set = atoms_of(task.kb_clauses);
    for (const Atom& a : atoms_of(alpha)) atom_set.insert(a);
    if (atom_set.size() > 8) continue;

    std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    PartialModel n = gen.partial(atoms, 0.6);
    std::vector<PartialModel> one{n};
    LearnConfig cfg;
    cfg.k = std::max<size_t>(kb.rank(), 1);
    Estimate sat_est = learn_estimate(one, kb, alpha, cfg);
    if (sat_est.per_example[0].resource_error) continue;
    ++done;
    cfg.z = int(atom_set.size());
    Estimate lim_est = learn_estimate_limited(one, kb, alpha, cfg);
    if (sat_est.v == 1 && lim_est.v == 0) ++missed;
    if (sat_est.v == 0 && lim_est.v == 1) ++overshot;
  }
  report(8, missed == 0 && overshot == 0, "Algorithm 1 vs 1' consistency",
         std::to_string(missed) + " missed / " + std::to_string(overshot) +
             " overshot in 200");
}

// 9. Union-bound proposition on two planted (1-eps)-valid clauses.
void criterion9() {
  const double eps = 0.05;
  WorldDistributionSpec world;
  world.vocabulary = {{"Grad", 1}, {"Prof", 1}};
  world.names = {Name{"ana"}, Name{"logan"}};
  world.mode = PlantedMode{
      parse_kb("forall x: !Prof(x)\nforall x: Grad(x)\n"),
      {1.0 - eps, 1.0 - eps},
      {{{parse_ground_atom("Prof(logan)"), true}},
       {{parse_ground_atom("Grad(logan)"), false}}}};
  world.seed = 17;
  // phi is entailed by each planted clause's grounding on logan
  GroundFormula phi = parse_query("Grad(logan) & !Prof(logan)");
  double validity = empirical_validity(world, phi, 10000, 21);
  bool ok = validity >= 1.0 - 2 * eps - 0.01;
  report(9, ok, "union-bound validity",
         "empirical " + std::to_string(validity) + " vs bound " +
             std::to_string(1.0 - 2 * eps - 0.01));
}

// 10. Soft complexity envelope: doubling |Delta| at fixed z.
void criterion10() {
  // pairwise-disjoint 2-literal clauses: no units, no subsumption of the
  // fresh query atom, so entails_z explores the full split space
  auto family = [](int n) {
    std::set<GroundClause> cs;
    for (int i = 0; i < n; ++i) {
      Atom a{"P", {Name{std::to_string(2 * i)}}};
      Atom b{"P", {Name{std::to_string(2 * i + 1)}}};
      cs.insert(GroundClause::of({Literal{a, true}, Literal{b, true}}));
    }
    return ClauseStore::of(cs);
  };
  GroundClause query = GroundClause::of({Literal{Atom{"Q", {}}, true}});
  auto median_runtime = [&](const ClauseStore& s, int z) {
    std::vector<double> times;
    for (int rep = 0; rep < 7; ++rep) {
      auto t0 = Clock::now();
      entails_z(s, query, z);
      times.push_back(seconds_since(t0));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };
  ClauseStore small = family(10), big = family(20);
  bool ok = true;
  std::string detail;
  for (int z = 0; z <= 2; ++z) {
    double r = median_runtime(big, z) / std::max(median_runtime(small, z), 1e-7);
    double bound = double(1 << (z + 1)) * 2;
    if (r > bound) ok = false;
    detail += "z=" + std::to_string(z) + " ratio " + std::to_string(r) + " ";
  }
  // soft gate: a miss is reported, not failed
  std::printf("%s: criterion 10 - complexity envelope (soft) — %s\n",
              ok ? "PASS" : "WARN", detail.c_str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
