#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "expresso/graph.hpp"
#include "expresso/limits.hpp"
#include "expresso/partition.hpp"

namespace expresso {

// A nonempty set of instances over one database. Instances are kept sorted
// and deduplicated. The database must outlive the set.
class InstanceSet {
 public:
  // Throws kDatabaseMismatch if some member is not an instance of db and
  // kEmptyInstance if the list is empty.
  InstanceSet(const GraphDatabase& db, std::vector<Instance> instances);

  const GraphDatabase& db() const noexcept { return *db_; }
  const std::vector<Instance>& instances() const noexcept { return instances_; }
  VertexSet image() const noexcept { return image_; }
  // The image of a name: union of f(x) over the set.
  VertexSet name_image(std::size_t x) const { return name_image_.at(x); }
  InstanceSet with(const Instance& g) const;

 private:
  const GraphDatabase* db_;
  std::vector<Instance> instances_;
  VertexSet image_ = 0;
  std::vector<VertexSet> name_image_;
};

// Path schema of a colored structure path: the schema vertex of every step,
// the schema edge crossed, whether it was crossed along its orientation and
// its color. Steps over a schema self-loop are always recorded as forward,
// since the schema cannot tell the two traversals apart.
struct PathSchema {
  std::vector<std::size_t> vertex_names;
  std::vector<std::size_t> edges;
  std::vector<bool> forward;
  std::vector<bool> colors;

  std::size_t length() const { return edges.size(); }
  friend auto operator<=>(const PathSchema&, const PathSchema&) = default;
  friend bool operator==(const PathSchema&, const PathSchema&) = default;
};

std::string to_string(const GraphDatabase& db, const PathSchema& p);

bool is_split(VertexSet a, const InstanceSet& is);

// (1) A lies inside the image of one name; (2) no instance splits A.
bool is_0_stable(VertexSet a, const InstanceSet& is);

// Every path schema of a walk from x to y of length 1..k whose vertices all lie
// in Z. Explicit enumeration, exponential in k.
std::set<PathSchema> path_dependencies(std::size_t x, std::size_t y, VertexSet z, std::size_t k,
                                       const InstanceSet& is);

bool is_k_stable(VertexSet a, VertexSet b, const InstanceSet& is, std::size_t k);
bool is_stable(VertexSet a, VertexSet b, const InstanceSet& is, std::size_t k_max);

// |E'|, and at least 1.
std::size_t default_k_max(const GraphDatabase& db);

// Memoizes stability verdicts per (A, B) for one instance set.
class StabilityChecker {
 public:
  StabilityChecker(const InstanceSet& is, std::size_t k_max);

  bool zero_stable(VertexSet a);
  bool k_stable(VertexSet a, VertexSet b, std::size_t k);
  bool stable(VertexSet a, VertexSet b) { return k_stable(a, b, k_max_); }
  bool valid(const Partition& p);
  std::size_t k_max() const noexcept { return k_max_; }

 private:
  struct Entry {
    bool zero;
    bool one;
    std::size_t first_failing_depth;  // over the path condition; k_max_ + 1 if none
  };
  const Entry& entry(VertexSet a, VertexSet b);
  std::size_t failing_depth(std::size_t a1, std::size_t a2, VertexSet b, VertexSet z) const;
  bool one_stable_edges(VertexSet a, VertexSet b) const;

  const InstanceSet& is_;
  std::size_t k_max_;
  // Per structure vertex: (step symbol, neighbour) pairs.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> steps_;
  std::map<VertexSet, bool> zero_;
  std::map<std::pair<VertexSet, VertexSet>, Entry> memo_;
};

VertexSet to_mask(const Partition::Class& c);
std::vector<int> members_as_ints(VertexSet s);
Partition partition_of(VertexSet ground, const std::vector<VertexSet>& classes);

// Every class is 0-stable and stable against each nonempty union of the
// others, for k up to k_max. Throws kGroundMismatch unless p partitions Im(I).
bool is_valid_partition(const Partition& p, const InstanceSet& is, std::size_t k_max);

// All valid partitions of Im(I) with no strictly coarser valid partition,
// found by enumerating every partition of Im(I).
std::vector<Partition> maximal_valid_partitions(const InstanceSet& is, std::size_t k_max,
                                                const Limits& limits = {});
// The unique coarsest valid partition; kInternal if the maximum is not unique.
Partition canonical_partition(const InstanceSet& is, std::size_t k_max, const Limits& limits = {});

// The exact closure of I under the graph algebra, sorted.
std::vector<Instance> bi_closure_graph(const InstanceSet& is, const Limits& limits = {});

// Classes of x ~ y iff every closure member contains both or neither.
Partition pbi_partition(const InstanceSet& is, const std::vector<Instance>& closure);
Partition pbi_partition(const InstanceSet& is, const Limits& limits = {});

struct GraphVerdict {
  bool expressible;
  Partition before;  // canonical partition of I
  Partition after;   // canonical partition of I with g adjoined
};

// Throws kDatabaseMismatch when g is not an instance of I's database.
GraphVerdict decide_expressible_graph(const Instance& g, const InstanceSet& is, std::size_t k_max,
                                      const Limits& limits = {});

}  // namespace expresso
