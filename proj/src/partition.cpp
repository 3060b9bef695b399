#include "expresso/partition.hpp"

#include <algorithm>

#include "expresso/error.hpp"
#include "expresso/permutation.hpp"

namespace expresso {

Partition::Partition(std::vector<Class> classes) : classes_(std::move(classes)) {
  for (auto& c : classes_) {
    if (c.empty()) throw Error(ErrorCode::kInvalidPartition, "empty class");
    std::sort(c.begin(), c.end());
    ground_.insert(ground_.end(), c.begin(), c.end());
  }
  std::sort(classes_.begin(), classes_.end(),
            [](const Class& a, const Class& b) { return a.front() < b.front(); });
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
    throw Error(ErrorCode::kInvalidPartition, "classes are not pairwise disjoint");
  }
}

Partition Partition::singletons(const std::vector<int>& ground) {
  std::vector<Class> classes;
  for (int x : ground) classes.push_back({x});
  return Partition(std::move(classes));
}

Partition Partition::whole(const std::vector<int>& ground) {
  if (ground.empty()) throw Error(ErrorCode::kInvalidPartition, "empty ground set");
  return Partition({ground});
}

const Partition::Class& Partition::class_of(int x) const {
  for (const auto& c : classes_) {
    if (std::binary_search(c.begin(), c.end(), x)) return c;
  }
  throw Error(ErrorCode::kElementOutOfRange, std::to_string(x) + " is not in the ground set");
}

std::string Partition::to_string() const {
  return to_string([](int x) { return std::to_string(x); });
}

std::string Partition::to_string(const std::function<std::string(int)>& label) const {
  std::string out;
  for (const auto& c : classes_) {
    out += '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += label(c[i]);
    }
    out += '}';
  }
  return out;
}

bool refines(const Partition& p1, const Partition& p2) {
  if (p1.ground() != p2.ground()) {
    throw Error(ErrorCode::kGroundMismatch, "partitions over different ground sets");
  }
  for (const auto& c : p1.classes()) {
    const auto& host = p2.class_of(c.front());
    if (!std::includes(host.begin(), host.end(), c.begin(), c.end())) return false;
  }
  return true;
}

void for_each_partition(const std::vector<int>& ground, std::size_t cap,
                        const std::function<void(const Partition&)>& fn) {
  const std::size_t n = ground.size();
  if (n > cap) {
    throw Error(ErrorCode::kResourceLimit, "set-partition enumeration over " + std::to_string(n) +
                                               " elements exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return;
  // a[i] is the block of ground[i]; a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<Partition::Class> classes(blocks);
    for (std::size_t i = 0; i < n; ++i) classes[a[i]].push_back(ground[i]);
    fn(Partition(std::move(classes)));

    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> universe(const RelationalDatabase& db) {
  std::vector<int> u(db.universe_size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = static_cast<int>(i + 1);
  return u;
}

bool preserves_classes(const Permutation& phi, const Partition& p) {
  for (const auto& c : p.classes()) {
    for (int x : c) {
      if (!std::binary_search(c.begin(), c.end(), phi(x))) return false;
    }
  }
  return true;
}

bool satisfies_orbit_condition(const Partition& p, const PermutationGroup& g) {
  std::vector<const Permutation*> keep;
  for (const auto& phi : g.elements()) {
    if (preserves_classes(phi, p)) keep.push_back(&phi);
  }
  for (const auto& c : p.classes()) {
    for (int a1 : c) {
      for (int a2 : c) {
        const bool reached = std::any_of(keep.begin(), keep.end(),
                                         [&](const Permutation* phi) { return (*phi)(a1) == a2; });
        if (!reached) return false;
      }
    }
  }
  return true;
}

bool witnesses_cycle_condition(const Permutation& phi, const Partition& p) {
  if (!preserves_classes(phi, p)) return false;
  for (const auto& c : p.classes()) {
    for (int a1 : c) {
      // The phi-cycle through a1 must cover the whole class.
      std::size_t reached = 0;
      int x = a1;
      do {
        if (std::binary_search(c.begin(), c.end(), x)) ++reached;
        x = phi(x);
      } while (x != a1);
      if (reached != c.size()) return false;
    }
  }
  return true;
}

}  // namespace

bool respects_data_domains(const Partition& p, const RelationalDatabase& db) {
  for (const auto& nr : db.relations()) {
    const auto dom = data_domain(nr.relation);
    for (const auto& c : p.classes()) {
      const auto inside = std::count_if(c.begin(), c.end(), [&](int x) { return dom.contains(x); });
      if (inside != 0 && static_cast<std::size_t>(inside) != c.size()) return false;
    }
  }
  return true;
}

PartitionSet op_set(const RelationalDatabase& db, const Limits& limits) {
  PartitionSet out;
  for (const auto& h : subgroups(aut(db), limits)) {
    Partition p = orbits(h);
    if (!respects_data_domains(p, db)) {
      throw Error(ErrorCode::kInternal, "orbit partition " + p.to_string() +
                                            " splits a data domain");
    }
    out.insert(std::move(p));
  }
  return out;
}

PartitionSet op_set_by_definition(const RelationalDatabase& db, const Limits& limits) {
  const auto g = aut(db);
  PartitionSet out;
  for_each_partition(universe(db), limits.partition_ground_cap, [&](const Partition& p) {
    if (respects_data_domains(p, db) && satisfies_orbit_condition(p, g)) out.insert(p);
  });
  return out;
}

PartitionSet cp_set(const RelationalDatabase& db) {
  PartitionSet out;
  const auto g = aut(db);
  for (const auto& psi : g.elements()) {
    Partition p = cycles(psi);
    if (!respects_data_domains(p, db) || !witnesses_cycle_condition(psi, p)) {
      throw Error(ErrorCode::kInternal, "cycle partition " + p.to_string() +
                                            " fails its defining conditions");
    }
    out.insert(std::move(p));
  }
  return out;
}

PartitionSet cp_set_by_definition(const RelationalDatabase& db, const Limits& limits) {
  const auto g = aut(db);
  PartitionSet out;
  for_each_partition(universe(db), limits.partition_ground_cap, [&](const Partition& p) {
    if (!respects_data_domains(p, db)) return;
    const bool witnessed = std::any_of(g.elements().begin(), g.elements().end(),
                                       [&](const Permutation& phi) { return witnesses_cycle_condition(phi, p); });
    if (witnessed) out.insert(p);
  });
  return out;
}

std::set<int> build_orbit(int x, const PartitionSet& cps) {
  if (cps.empty()) return {x};
  const auto& ground = cps.begin()->ground();
  for (const auto& p : cps) {
    if (p.ground() != ground) {
      throw Error(ErrorCode::kGroundMismatch, "cycle partitions over different ground sets");
    }
  }
  if (!std::binary_search(ground.begin(), ground.end(), x)) {
    throw Error(ErrorCode::kGroundMismatch, std::to_string(x) + " is not in the ground set");
  }
  std::set<int> result{x};
  bool modified = true;
  while (modified) {
    modified = false;
    for (const auto& p : cps) {
      // Smallest union of classes of p covering `result`.
      std::set<int> cover;
      for (int y : result) {
        const auto& c = p.class_of(y);
        cover.insert(c.begin(), c.end());
      }
      if (cover.size() > result.size()) {
        result.insert(cover.begin(), cover.end());
        modified = true;
      }
    }
  }
  return result;
}

PosetExtrema poset_extrema(const PartitionSet& ps) {
  if (ps.empty()) throw Error(ErrorCode::kInvalidPartition, "empty partition set");
  const auto& ground = ps.begin()->ground();
  for (const auto& p : ps) {
    if (p.ground() != ground) throw Error(ErrorCode::kGroundMismatch, "mixed ground sets");
  }
  PosetExtrema out;
  for (const auto& p : ps) {
    const bool below_all = std::all_of(ps.begin(), ps.end(), [&](const Partition& q) { return refines(p, q); });
    const bool above_all = std::all_of(ps.begin(), ps.end(), [&](const Partition& q) { return refines(q, p); });
    if (below_all) out.minimum = p;
    if (above_all) out.maximum = p;
  }
  return out;
}

}  // namespace expresso
