#include <doctest.h>

#include "pacfol/parse.hpp"
#include "pacfol/print.hpp"
#include "pacfol/sat.hpp"
#include "testutil.hpp"

using namespace pacfol;

namespace {

ProperPlusKB grad_kb() {
  return parse_kb(
      "forall x: Grad(x) | Prof(x)\n"
      "forall x: x != charles => Grad(x)\n");
}

GroundClause gc(const std::string& text) {
  // parse a ground clause as a single unguarded rank-0 KB clause
  ProperPlusKB kb = parse_kb("forall : " + text);
  Substitution empty;
  return pacfol::apply(kb.clauses[0], empty);
}

}  // namespace

TEST_CASE("eval_guard") {
  Variable x{"x"}, y{"y"};
  Substitution theta{{x, Name{"logan"}}};
  EqualityFormula ne_charles =
      EqualityFormula::neg(EqualityFormula::eq(x, Name{"charles"}));
  CHECK(eval_guard(ne_charles, theta));
  CHECK(eval_guard(EqualityFormula::eq(x, Name{"a"}), {{x, Name{"a"}}}));
  // !(x=a) & (y=b) under {x->a, y->b}
  EqualityFormula e = EqualityFormula::conj(
      EqualityFormula::neg(EqualityFormula::eq(x, Name{"a"})),
      EqualityFormula::eq(y, Name{"b"}));
  CHECK_FALSE(eval_guard(e, {{x, Name{"a"}}, {y, Name{"b"}}}));
  CHECK_THROWS_AS(eval_guard(e, {{x, Name{"a"}}}), std::invalid_argument);
}

TEST_CASE("GroundClause collapses duplicates and detects tautologies") {
  Literal p{Atom{"P", {Name{"1"}}}, true};
  GroundClause c = GroundClause::of({p, p, p.negated()});
  CHECK(c.lits.size() == 2);
  CHECK(c.tautological());
  CHECK(GroundClause::of({}).empty());
  CHECK(print(GroundClause::of({})) == "false");
}

TEST_CASE("gnd_with_names reproduces the paper grounding") {
  std::set<GroundClause> got =
      gnd_with_names(grad_kb(), {Name{"logan"}, Name{"jean"}});
  std::set<GroundClause> want;
  for (const char* n : {"charles", "logan", "jean"})
    want.insert(gc("Grad(" + std::string(n) + ") | Prof(" + n + ")"));
  want.insert(gc("Grad(logan)"));
  want.insert(gc("Grad(jean)"));
  CHECK(got == want);
}

TEST_CASE("gnd_with_names on a rank-0 KB ignores extra names") {
  ProperPlusKB kb = parse_kb("forall : P(1)");
  CHECK(gnd_with_names(kb, {}) == std::set<GroundClause>{gc("P(1)")});
  CHECK(gnd_with_names(kb, {Name{"a"}}) == std::set<GroundClause>{gc("P(1)")});
}

TEST_CASE("rank-2 clauses enumerate |Z|^2 bindings before guard filtering") {
  ProperPlusKB kb = parse_kb("forall x,y: R(x,y) | !R(y,x)");
  auto got = gnd_with_names(kb, {Name{"a"}, Name{"b"}, Name{"c"}});
  // 9 bindings; the 3 diagonal ones are tautological but still distinct
  // clauses R(n,n) | !R(n,n); off-diagonal pairs collapse symmetrically
  std::set<GroundClause> expect;
  for (const char* m : {"a", "b", "c"})
    for (const char* n : {"a", "b", "c"})
      expect.insert(gc("R(" + std::string(m) + "," + n + ") | !R(" +
                       std::string(n) + "," + m + ")"));
  CHECK(got == expect);
}

TEST_CASE("guard filtering drops failing bindings") {
  ProperPlusKB kb = parse_kb("forall x: x = a => P(x)");
  CHECK(gnd_with_names(kb, {Name{"a"}, Name{"b"}}) ==
        std::set<GroundClause>{gc("P(a)")});
}

TEST_CASE("fresh_names") {
  CHECK(fresh_names({Name{"charles"}}, 1) == std::vector<Name>{Name{"_f1"}});
  CHECK(fresh_names({Name{"_f1"}}, 2) ==
        std::vector<Name>{Name{"_f2"}, Name{"_f3"}});
  CHECK(fresh_names({}, 0).empty());
}

TEST_CASE("gnd_z composes fresh names with grounding") {
  ProperPlusKB kb = grad_kb();
  CHECK(gnd_z(kb, 1) ==
        gnd_with_names(kb, {Name{"_f1"}}));
  ProperPlusKB kb0 = parse_kb("forall : P(1)");
  CHECK(gnd_z(kb0, 0) == gnd_with_names(kb0, {}));
}

TEST_CASE("gnd_minus builds the grounding-trick task") {
  ProperPlusKB kb = grad_kb();
  GroundFormula alpha = parse_query("Grad(logan)");
  GroundTask task = gnd_minus(kb, alpha);
  CHECK(task.name_universe ==
        std::set<Name>{Name{"charles"}, Name{"logan"}, Name{"_f1"}});
  CHECK(task.negated_query == GroundFormula::neg(alpha));
  for (const auto& c : task.kb_clauses)
    for (const Name& n : names_of(c))
      CHECK(task.name_universe.count(n) == 1);

  ProperPlusKB kb0 = parse_kb("forall : P(1)");
  GroundTask t0 = gnd_minus(kb0, parse_query("P(1)"));
  CHECK(t0.name_universe == std::set<Name>{Name{"1"}});
}

TEST_CASE("grounding monotonicity in the name set") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    testutil::Gen gen(seed);
    ProperPlusKB kb = gen.kb(3, 2);
    std::set<Name> c1{Name{"a"}, Name{"b"}};
    std::set<Name> c2{Name{"a"}, Name{"b"}, Name{"c"}};
    auto g1 = gnd_with_names(kb, c1);
    auto g2 = gnd_with_names(kb, c2);
    CHECK(std::includes(g2.begin(), g2.end(), g1.begin(), g1.end()));
  }
}

TEST_CASE("fresh-name neutrality of gnd_minus") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    testutil::Gen gen(seed);
    ProperPlusKB kb = gen.kb(3, 2);
    GroundFormula alpha = gen.formula(2);
    GroundTask a = gnd_minus(kb, alpha);
    GroundTask b = gnd_minus(kb, alpha, kb.rank() + 2);
    // remap b's surplus grounding onto rank-many fresh names: restricting
    // b's clauses to a's universe must reproduce a exactly
    std::set<GroundClause> shrunk;
    for (const auto& c : b.kb_clauses) {
      bool inside = true;
      for (const Name& n : names_of(c))
        if (!a.name_universe.count(n)) inside = false;
      if (inside) shrunk.insert(c);
    }
    CHECK(shrunk == a.kb_clauses);
  }
}

TEST_CASE("lemma: satisfiable rank-1 groundings stay satisfiable") {
  int checked = 0;
  for (uint64_t seed = 0; checked < 100; ++seed) {
    testutil::Gen gen(seed);
    ForallClause c = gen.clause(1);
    if (c.rank() != 1) continue;
    ProperPlusKB kb{{c}};
    ++checked;
    bool sat1 =
        satisfiable({gnd_z(kb, 1), GroundFormula::constant(true)}).status ==
        SatStatus::Sat;
    if (!sat1) continue;
    for (size_t z : {2, 3}) {
      CHECK(satisfiable({gnd_z(kb, z), GroundFormula::constant(true)})
                .status == SatStatus::Sat);
    }
  }
}
