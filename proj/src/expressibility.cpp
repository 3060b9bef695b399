#include "expresso/expressibility.hpp"

#include <algorithm>

#include "expresso/error.hpp"

namespace expresso {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::kParedaens: return "paredaens";
    case Criterion::kAutEquality: return "aut_equality";
    case Criterion::kOrbitPartition: return "orbit_partition";
    case Criterion::kCyclePartition: return "cycle_partition";
  }
  return "unknown";
}

std::string Verdict::to_string() const {
  std::string out = std::string(expresso::to_string(criterion)) +
                    (expressible ? " expressible" : " not-expressible");
  if (witness) {
    out += ' ';
    if (const auto* p = std::get_if<Permutation>(&*witness)) {
      out += p->cycle_notation();
    } else {
      out += std::get<Partition>(*witness).to_string();
    }
  }
  return out;
}

namespace {

void check_universe(const Relation& s, const RelationalDatabase& db) {
  if (s.max_element() > static_cast<Element>(db.universe_size())) {
    throw Error(ErrorCode::kUniverseMismatch,
                "target mentions " + std::to_string(s.max_element()) + " outside 1.." +
                    std::to_string(db.universe_size()));
  }
}

RelationalDatabase adjoin(const Relation& s, const RelationalDatabase& db) {
  return db.with_relation("S", s);
}

Verdict compare_sets(Criterion c, const PartitionSet& before, const PartitionSet& after) {
  Verdict v{before == after, c, std::nullopt};
  if (!v.expressible) {
    std::vector<Partition> diff;
    std::set_symmetric_difference(before.begin(), before.end(), after.begin(), after.end(),
                                  std::back_inserter(diff));
    v.witness = *std::min_element(diff.begin(), diff.end());
  }
  return v;
}

}  // namespace

Verdict decide_paredaens(const Relation& s, const RelationalDatabase& db) {
  check_universe(s, db);
  Verdict v{true, Criterion::kParedaens, std::nullopt};
  const auto g = aut(db);
  for (const auto& psi : g.elements()) {
    if (!is_compatible(psi, s)) {
      v.expressible = false;
      v.witness = psi;
      return v;
    }
  }
  const auto ds = data_domain(s);
  const auto dr = data_domain(db);
  if (!std::includes(dr.begin(), dr.end(), ds.begin(), ds.end())) {
    std::vector<int> extra;
    std::set_difference(ds.begin(), ds.end(), dr.begin(), dr.end(), std::back_inserter(extra));
    v.expressible = false;
    v.witness = Partition({extra});
  }
  return v;
}

Verdict decide_aut_equality(const Relation& s, const RelationalDatabase& db) {
  check_universe(s, db);
  const auto g = aut(db);
  const auto h = aut(adjoin(s, db));
  Verdict v{g == h, Criterion::kAutEquality, std::nullopt};
  if (!v.expressible) {
    for (const auto& psi : g.elements()) {
      if (!h.contains(psi)) {
        v.witness = psi;
        break;
      }
    }
    if (!v.witness) throw Error(ErrorCode::kInternal, "adjoining a relation enlarged Aut");
  }
  return v;
}

Verdict decide_orbit(const Relation& s, const RelationalDatabase& db, const Limits& limits) {
  check_universe(s, db);
  return compare_sets(Criterion::kOrbitPartition, op_set(db, limits), op_set(adjoin(s, db), limits));
}

Verdict decide_cycle(const Relation& s, const RelationalDatabase& db) {
  check_universe(s, db);
  return compare_sets(Criterion::kCyclePartition, cp_set(db), cp_set(adjoin(s, db)));
}

Verdict decide(Criterion c, const Relation& s, const RelationalDatabase& db, const Limits& limits) {
  switch (c) {
    case Criterion::kParedaens: return decide_paredaens(s, db);
    case Criterion::kAutEquality: return decide_aut_equality(s, db);
    case Criterion::kOrbitPartition: return decide_orbit(s, db, limits);
    case Criterion::kCyclePartition: return decide_cycle(s, db);
  }
  throw Error(ErrorCode::kInternal, "unknown criterion");
}

CrossCheckReport cross_check(const Relation& s, const RelationalDatabase& db,
                             const std::optional<ClosureBounds>& bounds, const Limits& limits) {
  CrossCheckReport report;
  for (Criterion c : kAllCriteria) report.verdicts.push_back(decide(c, s, db, limits));
  for (const auto& v : report.verdicts) {
    if (v.expressible != report.verdicts.front().expressible) report.unanimous = false;
  }
  if (bounds) {
    report.bounded = is_expressible_bounded(s, db, *bounds);
    if (*report.bounded == BoundedAnswer::kYes) {
      report.bounded_conflict = std::any_of(report.verdicts.begin(), report.verdicts.end(),
                                            [](const Verdict& v) { return !v.expressible; });
    }
  }
  return report;
}

}  // namespace expresso
