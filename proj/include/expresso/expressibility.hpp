#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "expresso/limits.hpp"
#include "expresso/partition.hpp"
#include "expresso/permutation.hpp"
#include "expresso/relation.hpp"

namespace expresso {

enum class Criterion { kParedaens, kAutEquality, kOrbitPartition, kCyclePartition };

inline constexpr Criterion kAllCriteria[] = {Criterion::kParedaens, Criterion::kAutEquality,
                                             Criterion::kOrbitPartition, Criterion::kCyclePartition};

// "paredaens", "aut_equality", "orbit_partition", "cycle_partition".
std::string_view to_string(Criterion c);

using Witness = std::variant<Permutation, Partition>;

struct Verdict {
  bool expressible = false;
  Criterion criterion = Criterion::kParedaens;
  // Set whenever expressible is false. For a domain-only failure under the
  // Paredaens test the witness is the partition {D(S) \ D(R)} of offending elements.
  std::optional<Witness> witness;

  // "<criterion> <expressible|not-expressible> [witness]"
  std::string to_string() const;
};

// Each decision throws kUniverseMismatch when S mentions elements outside U.
Verdict decide_paredaens(const Relation& s, const RelationalDatabase& db);
Verdict decide_aut_equality(const Relation& s, const RelationalDatabase& db);
Verdict decide_orbit(const Relation& s, const RelationalDatabase& db, const Limits& limits = {});
Verdict decide_cycle(const Relation& s, const RelationalDatabase& db);
Verdict decide(Criterion c, const Relation& s, const RelationalDatabase& db, const Limits& limits = {});

struct CrossCheckReport {
  std::vector<Verdict> verdicts;
  bool unanimous = true;
  std::optional<BoundedAnswer> bounded;
  // Bounded closure found S but some criterion rejected it.
  bool bounded_conflict = false;

  bool consistent() const { return unanimous && !bounded_conflict; }
};

// Runs all four criteria and, when `bounds` is given, the bounded closure.
CrossCheckReport cross_check(const Relation& s, const RelationalDatabase& db,
                             const std::optional<ClosureBounds>& bounds = std::nullopt,
                             const Limits& limits = {});

}  // namespace expresso
