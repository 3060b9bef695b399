#include "doctest.h"
#include "expresso/expressibility.hpp"
#include "expresso/permutation.hpp"
#include "support/check.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace expresso;

TEST_CASE("criterion names") {
  CHECK(to_string(Criterion::kParedaens) == "paredaens");
  CHECK(to_string(Criterion::kAutEquality) == "aut_equality");
  CHECK(to_string(Criterion::kOrbitPartition) == "orbit_partition");
  CHECK(to_string(Criterion::kCyclePartition) == "cycle_partition");
}

TEST_CASE("klein verdicts") {
  const auto db = fx::klein();
  for (Criterion c : kAllCriteria) {
    CHECK(decide(c, cgr(db), db).expressible);
    CHECK(decide(c, fx::r1(), db).expressible);
    CHECK(decide(c, fx::r3(), fx::db_of({fx::r1(), fx::r2()})).expressible);
  }
  const auto v = decide_paredaens(cgr(db), db);
  CHECK(v.to_string() == "paredaens expressible");
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("R2 from R1 is not expressible") {
  const auto db = fx::db_of({fx::r1()});
  for (Criterion c : kAllCriteria) CHECK_FALSE(decide(c, fx::r2(), db).expressible);
  const auto v = decide_paredaens(fx::r2(), db);
  REQUIRE(v.witness.has_value());
  CHECK(std::get<Permutation>(*v.witness) == Permutation::from_cycles(4, {{3, 4}}));
  CHECK(v.to_string() == "paredaens not-expressible (3 4)");
  CHECK(decide_orbit(fx::r2(), db).to_string() == "orbit_partition not-expressible {1}{2}{3,4}");
}

TEST_CASE("five-cycle counterexample") {
  const auto r = fx::db_of({fx::five_r()});
  const auto s = fx::five_s();
  const auto p = decide_paredaens(s, r);
  CHECK_FALSE(p.expressible);
  CHECK(std::get<Permutation>(*p.witness).cycle_notation() == "(1 2 3 4 5)");
  CHECK_FALSE(decide_aut_equality(s, r).expressible);
  CHECK(aut(r.with_relation("S", s)).order() == 1);
  const auto o = decide_orbit(s, r);
  CHECK_FALSE(o.expressible);
  CHECK(std::get<Partition>(*o.witness) == Partition({{1, 2, 3, 4, 5}}));
  CHECK_FALSE(decide_cycle(s, r).expressible);
  const auto report = cross_check(s, r);
  CHECK(report.unanimous);
  CHECK(report.consistent());
}

TEST_CASE("targets outside the universe are rejected") {
  const auto db = fx::db_of({fx::r1()});
  for (Criterion c : kAllCriteria) CHECK_CODE(decide(c, Relation(1, {{5}}), db), ErrorCode::kUniverseMismatch);
}

TEST_CASE("cross check with bounded closure") {
  const auto db = fx::db_of({fx::r1()});
  ClosureBounds b;
  b.max_arity = 2;
  b.max_depth = 1;
  const auto yes = cross_check(restrict_neq(fx::r1(), 1, 2), db, b);
  CHECK(yes.bounded == BoundedAnswer::kYes);
  CHECK(yes.consistent());
  const auto no = cross_check(fx::r2(), db, b);
  CHECK(no.bounded == BoundedAnswer::kUnknown);
  CHECK(no.consistent());
}

TEST_CASE("criteria agree on random inputs") {
  gen::Rng rng(41);
  for (int i = 0; i < 120; ++i) {
    const auto db = gen::random_database(rng, 5);
    const auto g = aut(db);
    const auto s = gen::random_target(rng, db, g);
    const auto report = cross_check(s, db);
    CHECK(report.unanimous);
    // Adjoining a relation only removes automorphisms.
    CHECK(aut(db.with_relation("S", s)).is_subgroup_of(g));
    for (const auto& v : report.verdicts) CHECK(v.expressible != v.witness.has_value());
  }
}
