#include "doctest.h"
#include "expresso/stability.hpp"
#include "support/check.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace expresso;
using fx::X1;
using fx::X2;
using fx::Y1;
using fx::Y2;

namespace {
const VertexSet kX = bit(X1) | bit(X2);
const VertexSet kY = bit(Y1) | bit(Y2);

Partition classes(std::vector<VertexSet> cs) {
  VertexSet ground = 0;
  for (VertexSet c : cs) ground |= c;
  return partition_of(ground, cs);
}
}  // namespace

TEST_CASE("instance sets") {
  const auto db = fx::twobytwo();
  CHECK_CODE(InstanceSet(db, {}), ErrorCode::kEmptyInstance);
  CHECK_CODE(InstanceSet(db, {Instance({bit(X1), 0, 0})}), ErrorCode::kDatabaseMismatch);
  const InstanceSet is(db, {ext_instance(db), ext_instance(db)});
  CHECK(is.instances().size() == 1);
  CHECK(is.image() == 0b1111);
  CHECK(is.name_image(0) == kX);
}

TEST_CASE("split and 0-stable") {
  const auto db = fx::twobytwo();
  const InstanceSet ext(db, {ext_instance(db)});
  CHECK_FALSE(is_split(bit(X1), ext));
  CHECK_FALSE(is_split(0b1111, ext));
  const InstanceSet cut(db, {ext_instance(db), fx::inst(db, {bit(X1), bit(Y1)})});
  CHECK(is_split(kX, cut));

  CHECK(is_0_stable(kX, ext));
  CHECK_FALSE(is_0_stable(bit(X1) | bit(Y1), ext));
  CHECK_FALSE(is_0_stable(kX, cut));
  const InstanceSet small(db, {fx::inst(db, {bit(X1)})});
  CHECK_CODE(is_0_stable(bit(X2), small), ErrorCode::kNotInImage);
}

TEST_CASE("path dependencies") {
  const auto db = fx::twobytwo();
  const InstanceSet is(db, {ext_instance(db)});
  const auto pd = path_dependencies(X1, Y1, bit(X1) | bit(Y1), 1, is);
  REQUIRE(pd.size() == 1);
  CHECK(to_string(db, *pd.begin()) == "<a, ab+:true, b>");
  const auto pd2 = path_dependencies(X1, Y2, bit(X1) | bit(Y2), 1, is);
  REQUIRE(pd2.size() == 1);
  CHECK(pd2.begin()->colors == std::vector<bool>{false});
  CHECK(path_dependencies(X1, X1, bit(X1), 4, is).empty());
  // x1 -> y1 <- x1 -> y1: a walk of length three returns.
  CHECK(path_dependencies(X1, Y1, bit(X1) | bit(Y1), 3, is).size() == 2);
  CHECK_CODE(path_dependencies(X1, Y1, bit(X1), 1, is), ErrorCode::kNotInSet);
}

TEST_CASE("k-stability on the fixtures") {
  const auto db = fx::twobytwo();
  const InstanceSet is(db, {ext_instance(db)});
  CHECK(is_k_stable(kX, kY, is, 1));
  for (std::size_t k = 1; k <= 6; ++k) CHECK(is_stable(kX, kY, is, k));
  CHECK(is_k_stable(bit(X1), kY, is, 5));

  const auto skew = fx::skew();
  const InstanceSet sk(skew, {ext_instance(skew)});
  CHECK_FALSE(is_k_stable(kX, kY, sk, 1));
  CHECK_FALSE(is_stable(kX, kY, sk, 1));
  CHECK(is_k_stable(kX, kY, sk, 0));

  // Two pieces of Im with no edge between them: the path condition is vacuous.
  const InstanceSet split(db, {fx::inst(db, {bit(X1)}), fx::inst(db, {0, bit(Y2)})});
  CHECK(is_stable(bit(X1), bit(Y2), split, 3));
}

TEST_CASE("valid and canonical partitions") {
  const auto db = fx::twobytwo();
  const InstanceSet is(db, {ext_instance(db)});
  const std::size_t k = default_k_max(db);
  CHECK(k == 4);
  CHECK(is_valid_partition(classes({kX, kY}), is, k));
  CHECK(is_valid_partition(classes({bit(X1), bit(X2), bit(Y1), bit(Y2)}), is, k));
  CHECK(canonical_partition(is, k) == classes({kX, kY}));
  CHECK_CODE(is_valid_partition(classes({kX}), is, k), ErrorCode::kGroundMismatch);

  const auto skew = fx::skew();
  const InstanceSet sk(skew, {ext_instance(skew)});
  CHECK_FALSE(is_valid_partition(classes({kX, kY}), sk, k));
  CHECK(canonical_partition(sk, k) == classes({bit(X1), bit(X2), kY}));

  const InstanceSet sep(db, {ext_instance(db), fx::inst(db, {bit(X1), bit(Y1)}), fx::inst(db, {bit(X2)}),
                             fx::inst(db, {0, bit(Y2)})});
  CHECK(canonical_partition(sep, k) == classes({bit(X1), bit(X2), bit(Y1), bit(Y2)}));
}

TEST_CASE("exact closure and P^BI on the fixtures") {
  const auto db = fx::twobytwo();
  const InstanceSet is(db, {ext_instance(db)});
  const auto closure = bi_closure_graph(is);
  CHECK(std::binary_search(closure.begin(), closure.end(), ext_instance(db)));
  CHECK(std::binary_search(closure.begin(), closure.end(), fx::inst(db, {kX})));
  // The swap x1<->x2, y1<->y2 preserves every color, so x1 alone is out of reach.
  CHECK_FALSE(std::binary_search(closure.begin(), closure.end(), fx::inst(db, {bit(X1), bit(Y1)})));
  CHECK(pbi_partition(is) == classes({kX, kY}));

  const auto skew = fx::skew();
  CHECK(pbi_partition(InstanceSet(skew, {ext_instance(skew)})) == classes({bit(X1), bit(X2), kY}));

  const InstanceSet single(db, {fx::inst(db, {bit(X1), bit(Y2)})});
  const auto sc = bi_closure_graph(single);
  CHECK(std::binary_search(sc.begin(), sc.end(), fx::inst(db, {bit(X1)})));
  CHECK(std::binary_search(sc.begin(), sc.end(), fx::inst(db, {0, bit(Y2)})));

  Limits tiny;
  tiny.instance_cap = 2;
  CHECK_CODE(bi_closure_graph(is, tiny), ErrorCode::kResourceLimit);
}

TEST_CASE("graph expressibility decisions") {
  const auto db = fx::twobytwo();
  const InstanceSet is(db, {ext_instance(db)});
  const std::size_t k = default_k_max(db);
  CHECK(decide_expressible_graph(fx::inst(db, {kX}), is, k).expressible);
  const auto v = decide_expressible_graph(fx::inst(db, {bit(X1)}), is, k);
  CHECK_FALSE(v.expressible);
  CHECK(v.after == classes({bit(X1), bit(X2), bit(Y1), bit(Y2)}));
  CHECK_FALSE(decide_expressible_graph(fx::inst(db, {bit(X1)}), InstanceSet(fx::alltrue(), {ext_instance(fx::alltrue())}), k)
                  .expressible);
  const auto skew = fx::skew();
  const InstanceSet sk(skew, {ext_instance(skew)});
  CHECK(decide_expressible_graph(fx::inst(skew, {bit(X1)}), sk, k).expressible);
  CHECK(decide_expressible_graph(fx::inst(skew, {bit(X2), kY}), sk, k).expressible);
}

TEST_CASE("engine matches the explicit path oracle") {
  gen::Rng rng(61);
  auto subset = [&](VertexSet pool) {
    VertexSet s = 0;
    for (std::size_t y : members(pool))
      if (gen::coin(rng)) s |= bit(y);
    return s;
  };
  std::size_t compared = 0;
  for (int i = 0; i < 40; ++i) {
    const auto db = gen::random_graph_database(rng, 6);
    const InstanceSet is(db, gen::random_instance_list(rng, db));
    StabilityChecker chk(is, 3);
    for (int s = 0; s < 30; ++s) {
      const VertexSet a = subset(is.name_image(gen::uniform(rng, 0, db.schema().vertex_count() - 1)));
      const VertexSet b = subset(is.image() & ~a);
      if (a == 0 || b == 0) continue;
      bool prev = true;
      for (std::size_t k = 0; k <= 3; ++k) {
        const bool got = chk.k_stable(a, b, k);
        CHECK(got == oracle::k_stable(a, b, is, k));
        if (!prev) CHECK_FALSE(got);  // monotone in k
        prev = got;
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("singleton partitions are valid when singletons are 0-stable") {
  gen::Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    const auto db = gen::random_graph_database(rng, 6);
    const InstanceSet is(db, gen::random_instance_list(rng, db));
    const auto ys = members(is.image());
    std::vector<VertexSet> single;
    for (auto y : ys) single.push_back(bit(y));
    CHECK(is_valid_partition(partition_of(is.image(), single), is, default_k_max(db)));
    CHECK(maximal_valid_partitions(is, default_k_max(db)).size() == 1);
  }
}
