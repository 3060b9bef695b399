#include "doctest.h"
#include "expresso/partition.hpp"
#include "expresso/permutation.hpp"
#include "support/check.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace expresso;

namespace {
const std::vector<int> k4{1, 2, 3, 4};
}

TEST_CASE("partition values") {
  const Partition p({{4, 3}, {2, 1}});
  CHECK(p.classes().front() == Partition::Class{1, 2});
  CHECK(p.to_string() == "{1,2}{3,4}");
  CHECK(p.class_of(3) == Partition::Class{3, 4});
  CHECK_CODE(Partition({{1, 2}, {2}}), ErrorCode::kInvalidPartition);
  CHECK_CODE(Partition(std::vector<Partition::Class>{Partition::Class{}}), ErrorCode::kInvalidPartition);
}

TEST_CASE("refinement") {
  CHECK(refines(Partition::singletons(k4), Partition({{1, 2}, {3, 4}})));
  CHECK(refines(Partition({{1, 2}, {3, 4}}), Partition::whole(k4)));
  CHECK_FALSE(refines(Partition({{1, 2}, {3, 4}}), Partition({{1, 3}, {2, 4}})));
  CHECK_CODE(refines(Partition::whole({1, 2}), Partition::whole(k4)), ErrorCode::kGroundMismatch);
}

TEST_CASE("enumeration counts Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    std::size_t count = 0;
    PartitionSet seen;
    for_each_partition(g, 12, [&](const Partition& p) {
      ++count;
      seen.insert(p);
    });
    CHECK(count == bell[n]);
    CHECK(seen.size() == bell[n]);
  }
  CHECK_CODE(for_each_partition(std::vector<int>(13, 0), 12, [](const Partition&) {}), ErrorCode::kResourceLimit);
}

TEST_CASE("klein partition sets") {
  const auto db = fx::klein();
  const PartitionSet cp{Partition::singletons(k4), Partition({{1, 2}, {3, 4}}), Partition({{1, 3}, {2, 4}}),
                        Partition({{1, 4}, {2, 3}})};
  auto op = cp;
  op.insert(Partition::whole(k4));
  CHECK(cp_set(db) == cp);
  CHECK(op_set(db) == op);
  CHECK(cp_set_by_definition(db) == cp);
  CHECK(op_set_by_definition(db) == op);

  const auto eo = poset_extrema(op);
  CHECK(eo.minimum == Partition::singletons(k4));
  CHECK(eo.maximum == Partition::whole(k4));
  const auto ec = poset_extrema(cp);
  CHECK(ec.minimum == Partition::singletons(k4));
  CHECK_FALSE(ec.maximum.has_value());
  const auto es = poset_extrema({Partition::singletons(k4)});
  CHECK(es.minimum == es.maximum);
}

TEST_CASE("trivial and five-cycle partition sets") {
  const auto rigid = fx::db_of({Relation(2, {{1, 2}, {2, 3}})});
  CHECK(op_set(rigid) == PartitionSet{Partition::singletons({1, 2, 3})});
  CHECK(cp_set(rigid) == PartitionSet{Partition::singletons({1, 2, 3})});
  const std::vector<int> u5{1, 2, 3, 4, 5};
  const PartitionSet both{Partition::singletons(u5), Partition::whole(u5)};
  CHECK(cp_set(fx::db_of({fx::five_r()})) == both);
  CHECK(op_set(fx::db_of({fx::five_s()})) == both);
  CHECK(op_set(fx::db_of({fx::five_r(), fx::five_s()})) == PartitionSet{Partition::singletons(u5)});
}

TEST_CASE("build orbit") {
  CHECK(build_orbit(1, cp_set(fx::klein())) == std::set<int>{1, 2, 3, 4});
  CHECK(build_orbit(2, {Partition::singletons(k4)}) == std::set<int>{2});
  const PartitionSet cps{Partition({{1, 2}, {3}, {4}}), Partition({{1}, {2, 3}, {4}})};
  CHECK(build_orbit(1, cps) == std::set<int>{1, 2, 3});
  CHECK_CODE(build_orbit(9, cps), ErrorCode::kGroundMismatch);
}

TEST_CASE("data domains respected") {
  const auto db = fx::db_of({Relation(1, {{1}, {2}}), Relation(2, {{1, 3}, {2, 3}})});
  CHECK(respects_data_domains(Partition({{1, 2}, {3}}), db));
  CHECK_FALSE(respects_data_domains(Partition({{1, 3}, {2}}), db));
}

TEST_CASE("partition sets on random databases") {
  gen::Rng rng(31);
  for (int i = 0; i < 80; ++i) {
    const auto db = gen::random_database(rng, 5);
    const auto op = op_set(db), cp = cp_set(db);
    CHECK(op == op_set_by_definition(db));
    CHECK(cp == cp_set_by_definition(db));
    CHECK(std::includes(op.begin(), op.end(), cp.begin(), cp.end()));
    std::vector<int> u(db.universe_size());
    std::iota(u.begin(), u.end(), 1);
    CHECK(poset_extrema(op).minimum == Partition::singletons(u));
    CHECK(poset_extrema(cp).minimum == Partition::singletons(u));
    const auto g = aut(db);
    CHECK(poset_extrema(op).maximum == orbits(g));
    for (const auto& p : op) CHECK(respects_data_domains(p, db));
    for (int x : u) CHECK(build_orbit(x, cp) == oracle::orbit(g, x));
  }
}

TEST_CASE("rigidity on random subgroup pairs") {
  gen::Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto g = gen::random_group(rng, gen::uniform(rng, 2, 6), 48);
    const auto subs = subgroups(g);
    auto op_of = [&](const PermutationGroup& h) {
      PartitionSet out;
      for (const auto& k : subs)
        if (k.is_subgroup_of(h)) out.insert(orbits(k));
      return out;
    };
    auto cp_of = [](const PermutationGroup& h) {
      PartitionSet out;
      for (const auto& p : h.elements()) out.insert(cycles(p));
      return out;
    };
    const auto opg = op_of(g), cpg = cp_of(g);
    for (const auto& h : subs) {
      if (op_of(h) == opg) CHECK(h == g);
      if (cp_of(h) == cpg) CHECK(h == g);
    }
  }
}
