#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "expresso/limits.hpp"
#include "expresso/relation.hpp"

namespace expresso {

// A partition of a finite set of integers, held in canonical form: elements
// ascending inside each class, classes ordered by least element. Two
// partitions are equal exactly when they have the same classes.
class Partition {
 public:
  using Class = std::vector<int>;

  explicit Partition(std::vector<Class> classes);

  static Partition singletons(const std::vector<int>& ground);
  static Partition whole(const std::vector<int>& ground);

  const std::vector<Class>& classes() const noexcept { return classes_; }
  const std::vector<int>& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return classes_.size(); }
  // The class holding x; throws kElementOutOfRange when x is not in the ground set.
  const Class& class_of(int x) const;

  // "{1,2}{3,4}". The label callback maps elements to printed names.
  std::string to_string() const;
  std::string to_string(const std::function<std::string(int)>& label) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.classes_ <=> b.classes_;
  }

 private:
  std::vector<Class> classes_;
  std::vector<int> ground_;
};

using PartitionSet = std::set<Partition>;

// P1 <= P2: every class of p1 lies inside some class of p2.
bool refines(const Partition& p1, const Partition& p2);

// OP(R), built as { orbits(H) : H a subgroup of Aut(R) }.
PartitionSet op_set(const RelationalDatabase& db, const Limits& limits = {});
// OP(R), built directly from the two defining conditions by scanning every
// partition of U. Independent of subgroup enumeration.
PartitionSet op_set_by_definition(const RelationalDatabase& db, const Limits& limits = {});

// CP(R) = { cycles(psi) : psi in Aut(R) }. Each member is checked against the
// defining conditions before being returned.
PartitionSet cp_set(const RelationalDatabase& db);
PartitionSet cp_set_by_definition(const RelationalDatabase& db, const Limits& limits = {});

// Condition 1 of both definitions: every class is disjoint from or contained
// in the data domain of each relation.
bool respects_data_domains(const Partition& p, const RelationalDatabase& db);

// The least set containing x that is a union of classes of every partition in
// cps, computed by the repeat-until-unmodified sweep.
std::set<int> build_orbit(int x, const PartitionSet& cps);

struct PosetExtrema {
  std::optional<Partition> minimum;
  std::optional<Partition> maximum;
};

PosetExtrema poset_extrema(const PartitionSet& ps);

// Calls fn(partition) for every partition of `ground` (restricted growth
// strings). Throws kResourceLimit when |ground| exceeds the cap.
void for_each_partition(const std::vector<int>& ground, std::size_t cap,
                        const std::function<void(const Partition&)>& fn);

}  // namespace expresso
