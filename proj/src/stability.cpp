#include "expresso/stability.hpp"

#include <algorithm>
#include <functional>

#include "expresso/error.hpp"

namespace expresso {

InstanceSet::InstanceSet(const GraphDatabase& db, std::vector<Instance> instances)
    : db_(&db), instances_(std::move(instances)) {
  if (instances_.empty()) throw Error(ErrorCode::kEmptyInstance, "instance set is empty");
  std::sort(instances_.begin(), instances_.end());
  instances_.erase(std::unique(instances_.begin(), instances_.end()), instances_.end());
  name_image_.assign(db.schema().vertex_count(), 0);
  for (const auto& f : instances_) {
    if (!is_instance(db, f)) {
      throw Error(ErrorCode::kDatabaseMismatch, "member is not an instance of the database");
    }
    for (std::size_t x = 0; x < name_image_.size(); ++x) name_image_[x] |= f.at(x);
    image_ |= f.image();
  }
}

InstanceSet InstanceSet::with(const Instance& g) const {
  auto more = instances_;
  more.push_back(g);
  return InstanceSet(*db_, std::move(more));
}

std::string to_string(const GraphDatabase& db, const PathSchema& p) {
  std::string out = "<" + db.schema().label(p.vertex_names.front());
  for (std::size_t i = 0; i < p.length(); ++i) {
    out += ", " + db.schema().edges()[p.edges[i]].label + (p.forward[i] ? "+" : "-") +
           (p.colors[i] ? ":true" : ":false") + ", " + db.schema().label(p.vertex_names[i + 1]);
  }
  return out + ">";
}

namespace {

void require_in_image(VertexSet s, const InstanceSet& is, const char* what) {
  if ((s & ~is.image()) != 0) {
    throw Error(ErrorCode::kNotInImage, std::string(what) + " is not a subset of Im(I)");
  }
}

// One traversal of a structure edge, reduced to what the path schema records.
struct Step {
  std::size_t edge;
  bool forward;
  bool color;
  std::size_t target;

  std::uint32_t symbol() const {
    return static_cast<std::uint32_t>(edge * 4 + (forward ? 2 : 0) + (color ? 1 : 0));
  }
};

std::vector<std::vector<Step>> structure_steps(const GraphDatabase& db) {
  std::vector<std::vector<Step>> steps(db.structure().vertex_count());
  for (const auto& e : db.structure().edges()) {
    const std::size_t u = db.name_of(e.from);
    const std::size_t w = db.name_of(e.to);
    const auto idx = db.schema().edge_between(u, w);
    if (!idx) throw Error(ErrorCode::kInvalidDatabase, "structure edge without a schema edge");
    const bool loop = u == w;
    steps[e.from].push_back({*idx, true, e.color, e.to});
    if (e.from != e.to) steps[e.to].push_back({*idx, loop, e.color, e.from});
  }
  return steps;
}

}  // namespace

bool is_split(VertexSet a, const InstanceSet& is) {
  require_in_image(a, is, "A");
  return std::any_of(is.instances().begin(), is.instances().end(), [&](const Instance& f) {
    return (a & f.image()) != 0 && (a & ~f.image()) != 0;
  });
}

bool is_0_stable(VertexSet a, const InstanceSet& is) {
  require_in_image(a, is, "A");
  if (a == 0) throw Error(ErrorCode::kNotInImage, "A is empty");
  bool one_name = false;
  for (std::size_t x = 0; x < is.db().schema().vertex_count(); ++x) {
    if ((a & ~is.name_image(x)) == 0) one_name = true;
  }
  return one_name && !is_split(a, is);
}

std::set<PathSchema> path_dependencies(std::size_t x, std::size_t y, VertexSet z, std::size_t k,
                                       const InstanceSet& is) {
  require_in_image(z, is, "Z");
  if (!has(z, x) || !has(z, y)) throw Error(ErrorCode::kNotInSet, "path endpoints must lie in Z");
  const auto& db = is.db();
  const auto steps = structure_steps(db);
  std::set<PathSchema> out;
  PathSchema current;
  current.vertex_names.push_back(db.name_of(x));

  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (current.length() > 0 && v == y) out.insert(current);
    if (current.length() == k) return;
    for (const auto& s : steps[v]) {
      if (!has(z, s.target)) continue;
      current.vertex_names.push_back(db.name_of(s.target));
      current.edges.push_back(s.edge);
      current.forward.push_back(s.forward);
      current.colors.push_back(s.color);
      walk(s.target);
      current.vertex_names.pop_back();
      current.edges.pop_back();
      current.forward.pop_back();
      current.colors.pop_back();
    }
  };
  walk(x);
  return out;
}

std::size_t default_k_max(const GraphDatabase& db) {
  return std::max<std::size_t>(1, db.structure().edges().size());
}

bool is_k_stable(VertexSet a, VertexSet b, const InstanceSet& is, std::size_t k) {
  StabilityChecker checker(is, std::max<std::size_t>(k, 1));
  return checker.k_stable(a, b, k);
}

bool is_stable(VertexSet a, VertexSet b, const InstanceSet& is, std::size_t k_max) {
  StabilityChecker checker(is, k_max);
  return checker.stable(a, b);
}

// ---------------------------------------------------------------------------

StabilityChecker::StabilityChecker(const InstanceSet& is, std::size_t k_max)
    : is_(is), k_max_(k_max) {
  for (const auto& list : structure_steps(is.db())) {
    auto& mine = steps_.emplace_back();
    for (const auto& s : list) mine.emplace_back(s.symbol(), s.target);
  }
}

bool StabilityChecker::zero_stable(VertexSet a) {
  const auto it = zero_.find(a);
  if (it != zero_.end()) return it->second;
  const bool z = is_0_stable(a, is_);
  zero_.emplace(a, z);
  return z;
}

bool StabilityChecker::k_stable(VertexSet a, VertexSet b, std::size_t k) {
  if (k > k_max_) {
    throw Error(ErrorCode::kResourceLimit, "k = " + std::to_string(k) + " exceeds the checker's k_max " +
                                               std::to_string(k_max_));
  }
  const Entry& e = entry(a, b);
  if (k == 0) return e.zero;
  if (k == 1) return e.one;
  return e.one && e.first_failing_depth > k;
}

const StabilityChecker::Entry& StabilityChecker::entry(VertexSet a, VertexSet b) {
  const auto key = std::make_pair(a, b);
  const auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  require_in_image(b, is_, "B");
  if ((a & b) != 0) throw Error(ErrorCode::kNotDisjoint, "A and B overlap");
  Entry e{zero_stable(a), false, k_max_ + 1};
  e.one = e.zero && one_stable_edges(a, b);
  if (e.one && k_max_ >= 2) {
    const auto as = members(a);
    for (std::size_t a1 : as) {
      for (std::size_t a2 : as) {
        if (a1 == a2) continue;
        e.first_failing_depth = std::min(e.first_failing_depth, failing_depth(a1, a2, b, a | b));
      }
    }
  }
  return memo_.emplace(key, e).first->second;
}

bool StabilityChecker::one_stable_edges(VertexSet a, VertexSet b) const {
  const auto& db = is_.db();
  const auto& s = db.structure();
  const auto as = members(a);
  const auto bs = members(b);
  for (std::size_t a1 : as) {
    for (std::size_t b1 : bs) {
      const auto out = s.color(a1, b1);
      const auto in = s.color(b1, a1);
      for (std::size_t a2 : as) {
        // b2 must carry the name of b1, so the two edges cross the same schema edge.
        auto same_name = [&](std::size_t b2) { return db.name_of(b2) == db.name_of(b1); };
        if (out && std::none_of(bs.begin(), bs.end(),
                                [&](std::size_t b2) { return same_name(b2) && s.color(a2, b2) == out; })) {
          return false;
        }
        if (in && std::none_of(bs.begin(), bs.end(),
                               [&](std::size_t b2) { return same_name(b2) && s.color(b2, a2) == in; })) {
          return false;
        }
      }
    }
  }
  return true;
}

// Smallest k at which "for every b1 in B some b2 in B has PD_k(a1,b1) within
// PD_k(a2,b2)" fails, or k_max + 1.
//
// Reading a word w of path-schema steps from a1 and a2 in parallel gives the
// pair (S1(w), S2(w)) of endpoints. PD_k(a1,b1) is within PD_k(a2,b2) iff b2
// lies in S2(w) for every word w of length at most k with b1 in S1(w). The
// search visits each pair of endpoint sets once, at the length of its shortest
// word, and keeps the running intersection of S2 per b1.
std::size_t StabilityChecker::failing_depth(std::size_t a1, std::size_t a2, VertexSet b,
                                            VertexSet z) const {
  const std::size_t n = steps_.size();
  std::vector<VertexSet> allowed(n, ~VertexSet{0});
  std::set<std::pair<VertexSet, VertexSet>> seen;
  std::vector<std::pair<VertexSet, VertexSet>> frontier{{bit(a1), bit(a2)}};
  seen.insert(frontier.front());
  const auto bs = members(b);

  for (std::size_t depth = 1; depth <= k_max_ && !frontier.empty(); ++depth) {
    std::vector<std::pair<VertexSet, VertexSet>> next;
    for (const auto& [s1, s2] : frontier) {
      std::map<std::uint32_t, std::pair<VertexSet, VertexSet>> moves;
      for (std::size_t v : members(s1)) {
        for (const auto& [sym, w] : steps_[v]) {
          if (has(z, w)) moves[sym].first |= bit(w);
        }
      }
      for (std::size_t v : members(s2)) {
        for (const auto& [sym, w] : steps_[v]) {
          if (!has(z, w)) continue;
          const auto it = moves.find(sym);
          if (it != moves.end()) it->second.second |= bit(w);
        }
      }
      for (const auto& [sym, st] : moves) {
        if (seen.insert(st).second) next.push_back(st);
      }
    }
    for (const auto& [s1, s2] : next) {
      for (std::size_t v : members(s1)) allowed[v] &= s2;
    }
    for (std::size_t b1 : bs) {
      if ((allowed[b1] & b) == 0) return depth;
    }
    frontier = std::move(next);
  }
  return k_max_ + 1;
}

bool StabilityChecker::valid(const Partition& p) {
  if (p.ground() != members_as_ints(is_.image())) {
    throw Error(ErrorCode::kGroundMismatch, "partition does not cover exactly Im(I)");
  }
  std::vector<VertexSet> classes;
  for (const auto& c : p.classes()) classes.push_back(to_mask(c));
  for (VertexSet c : classes) {
    if (!zero_stable(c)) return false;
  }
  const std::size_t m = classes.size();
  if (m > 24) throw Error(ErrorCode::kResourceLimit, "too many classes for the union enumeration");
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<VertexSet> others;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) others.push_back(classes[j]);
    }
    for (std::uint64_t l = 1; l < (std::uint64_t{1} << others.size()); ++l) {
      VertexSet b = 0;
      for (std::size_t j = 0; j < others.size(); ++j) {
        if ((l >> j) & 1u) b |= others[j];
      }
      if (!stable(classes[i], b)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

VertexSet to_mask(const Partition::Class& c) {
  VertexSet m = 0;
  for (int y : c) m |= bit(static_cast<std::size_t>(y));
  return m;
}

std::vector<int> members_as_ints(VertexSet s) {
  std::vector<int> out;
  for (std::size_t y : members(s)) out.push_back(static_cast<int>(y));
  return out;
}

Partition partition_of(VertexSet ground, const std::vector<VertexSet>& classes) {
  std::vector<Partition::Class> out;
  VertexSet covered = 0;
  for (VertexSet c : classes) {
    out.push_back(members_as_ints(c));
    covered |= c;
  }
  if (covered != ground) throw Error(ErrorCode::kGroundMismatch, "classes do not cover the ground set");
  return Partition(std::move(out));
}

bool is_valid_partition(const Partition& p, const InstanceSet& is, std::size_t k_max) {
  StabilityChecker checker(is, k_max);
  return checker.valid(p);
}

std::vector<Partition> maximal_valid_partitions(const InstanceSet& is, std::size_t k_max,
                                                const Limits& limits) {
  StabilityChecker checker(is, k_max);
  std::vector<std::vector<VertexSet>> valid;
  for_each_partition(members_as_ints(is.image()), limits.partition_ground_cap, [&](const Partition& p) {
    std::vector<VertexSet> classes;
    for (const auto& c : p.classes()) {
      classes.push_back(to_mask(c));
      if (!checker.zero_stable(classes.back())) return;
    }
    if (checker.valid(p)) valid.push_back(std::move(classes));
  });

  auto coarser_or_equal = [](const std::vector<VertexSet>& fine, const std::vector<VertexSet>& coarse) {
    return std::all_of(fine.begin(), fine.end(), [&](VertexSet c) {
      return std::any_of(coarse.begin(), coarse.end(), [&](VertexSet d) { return (c & ~d) == 0; });
    });
  };
  std::vector<Partition> out;
  for (std::size_t i = 0; i < valid.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < valid.size() && maximal; ++j) {
      if (j != i && valid[j].size() < valid[i].size() && coarser_or_equal(valid[i], valid[j])) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(partition_of(is.image(), valid[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition canonical_partition(const InstanceSet& is, std::size_t k_max, const Limits& limits) {
  auto maxima = maximal_valid_partitions(is, k_max, limits);
  if (maxima.size() != 1) {
    std::string listing;
    for (const auto& p : maxima) listing += " " + p.to_string();
    throw Error(ErrorCode::kInternal, std::to_string(maxima.size()) +
                                          " maximal valid partitions instead of one:" + listing);
  }
  return maxima.front();
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Instance> checked(const GraphDatabase& db, std::vector<VertexSet> images) {
  Instance f(std::move(images));
  const VertexSet dom = f.domain();
  if (dom == 0 || !db.schema().induces_connected(dom)) return std::nullopt;
  return f;
}

}  // namespace

std::vector<Instance> bi_closure_graph(const InstanceSet& is, const Limits& limits) {
  const auto& db = is.db();
  const std::size_t names = db.schema().vertex_count();

  struct Sel {
    VertexSet vertices;
    std::vector<Instance> simple;
  };
  std::vector<Sel> selectors;
  for (const auto& sel : all_selectors(db)) {
    auto simple = simple_instances(db, sel);
    if (!simple.empty()) selectors.push_back({sel.vertices, {simple.begin(), simple.end()}});
  }

  std::set<Instance> known;
  std::vector<Instance> processed;
  std::vector<Instance> queue;
  auto offer = [&](std::optional<Instance> f) {
    if (!f || !known.insert(*f).second) return;
    if (known.size() > limits.instance_cap) {
      throw Error(ErrorCode::kResourceLimit, "graph closure exceeds " +
                                                 std::to_string(limits.instance_cap) + " instances");
    }
    queue.push_back(std::move(*f));
  };
  for (const auto& f : is.instances()) offer(f);

  std::vector<VertexSet> images(names);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Instance f = queue[q];
    processed.push_back(f);
    const VertexSet dom = f.domain();

    for (const auto& g : processed) {
      if (g.domain() == dom) {
        for (std::size_t x = 0; x < names; ++x) images[x] = f.at(x) | g.at(x);
        offer(checked(db, images));
        for (std::size_t x = 0; x < names; ++x) images[x] = f.at(x) & ~g.at(x);
        offer(checked(db, images));
        for (std::size_t x = 0; x < names; ++x) images[x] = g.at(x) & ~f.at(x);
        offer(checked(db, images));
      }
      for (std::size_t x = 0; x < names; ++x) {
        const VertexSet a = f.at(x);
        const VertexSet b = g.at(x);
        images[x] = (a != 0 && b != 0) ? (a & b) : (a | b);
      }
      offer(checked(db, images));
    }

    for (VertexSet sub = dom; sub != 0; sub = (sub - 1) & dom) {
      if (!db.schema().induces_connected(sub)) continue;
      for (std::size_t x = 0; x < names; ++x) images[x] = has(sub, x) ? f.at(x) : 0;
      offer(checked(db, images));
    }

    for (const auto& sel : selectors) {
      if ((sel.vertices & ~dom) != 0) continue;
      std::fill(images.begin(), images.end(), 0);
      bool any = false;
      for (const auto& s : sel.simple) {
        if (!s.restricts(f)) continue;
        any = true;
        for (std::size_t x = 0; x < names; ++x) images[x] |= s.at(x);
      }
      if (any) offer(checked(db, images));
    }
  }
  return {known.begin(), known.end()};
}

Partition pbi_partition(const InstanceSet& is, const std::vector<Instance>& closure) {
  std::vector<VertexSet> classes{is.image()};
  for (const auto& f : closure) {
    const VertexSet m = f.image();
    std::vector<VertexSet> next;
    for (VertexSet c : classes) {
      if ((c & m) != 0) next.push_back(c & m);
      if ((c & ~m) != 0) next.push_back(c & ~m);
    }
    classes = std::move(next);
  }
  return partition_of(is.image(), classes);
}

Partition pbi_partition(const InstanceSet& is, const Limits& limits) {
  return pbi_partition(is, bi_closure_graph(is, limits));
}

GraphVerdict decide_expressible_graph(const Instance& g, const InstanceSet& is, std::size_t k_max,
                                      const Limits& limits) {
  if (!is_instance(is.db(), g)) {
    throw Error(ErrorCode::kDatabaseMismatch, "candidate is not an instance of the database");
  }
  Partition before = canonical_partition(is, k_max, limits);
  Partition after = canonical_partition(is.with(g), k_max, limits);
  const bool same = before == after;
  return {same, std::move(before), std::move(after)};
}

}  // namespace expresso
