#include <algorithm>
#include <unordered_set>

#include "expresso/error.hpp"
#include "expresso/relation.hpp"

namespace expresso {

namespace {

// Calls fn(positions) for every map f: {1..q} -> {1..m}, 1 <= q <= min(m, cap).
template <typename Fn>
void for_each_projection(std::size_t m, std::size_t cap, Fn&& fn) {
  const std::size_t q_max = std::min(m, cap);
  std::vector<std::size_t> pos;
  for (std::size_t q = 1; q <= q_max; ++q) {
    pos.assign(q, 1);
    while (true) {
      fn(std::span<const std::size_t>(pos));
      std::size_t i = q;
      while (i > 0 && pos[i - 1] == m) pos[--i] = 1;
      if (i == 0) break;
      ++pos[i - 1];
    }
  }
}

class ClosureState {
 public:
  explicit ClosureState(const ClosureBounds& bounds) : bounds_(bounds) {}

  // Returns true when r is new.
  bool add(Relation r) {
    if (r.is_empty() || r.arity() > bounds_.max_arity) return false;
    if (seen_.contains(r)) return false;
    if (seen_.size() >= bounds_.relation_cap) {
      throw Error(ErrorCode::kResourceLimit,
                  "bounded closure exceeded " + std::to_string(bounds_.relation_cap) + " relations");
    }
    seen_.insert(r);
    fresh_.push_back(std::move(r));
    return true;
  }

  std::vector<Relation> take_fresh() { return std::exchange(fresh_, {}); }
  const std::unordered_set<Relation, RelationHash>& seen() const { return seen_; }

 private:
  ClosureBounds bounds_;
  std::unordered_set<Relation, RelationHash> seen_;
  std::vector<Relation> fresh_;
};

}  // namespace

ClosureBounds default_bounds(const RelationalDatabase& db) {
  std::size_t max_arity = 1;
  for (const auto& nr : db.relations()) max_arity = std::max(max_arity, nr.relation.arity());
  ClosureBounds b;
  b.max_arity = 2 * max_arity;
  b.max_depth = 4;
  return b;
}

std::vector<Relation> bi_closure_bounded(const RelationalDatabase& db, const ClosureBounds& bounds) {
  for (const auto& nr : db.relations()) {
    if (nr.relation.arity() > bounds.max_arity) {
      throw Error(ErrorCode::kArityMismatch, "max_arity " + std::to_string(bounds.max_arity) +
                                                 " is below input arity " +
                                                 std::to_string(nr.relation.arity()));
    }
  }
  ClosureState state(bounds);
  for (const auto& nr : db.relations()) state.add(nr.relation);
  std::vector<Relation> all;
  std::vector<Relation> frontier = state.take_fresh();

  for (std::size_t depth = 0; depth < bounds.max_depth && !frontier.empty(); ++depth) {
    all.insert(all.end(), frontier.begin(), frontier.end());
    for (const Relation& r : frontier) {
      const std::size_t m = r.arity();
      for_each_projection(m, bounds.max_arity,
                          [&](std::span<const std::size_t> pos) { state.add(project(r, pos)); });
      for (std::size_t j1 = 1; j1 <= m; ++j1) {
        for (std::size_t j2 = j1 + 1; j2 <= m; ++j2) {
          state.add(restrict_eq(r, j1, j2));
          state.add(restrict_neq(r, j1, j2));
        }
      }
      // `all` already holds the frontier, so every pair with at least one
      // member from this round is visited.
      for (const Relation& s : all) {
        if (r.arity() == s.arity()) state.add(union_rel(r, s));
        if (r.arity() + s.arity() <= bounds.max_arity) {
          state.add(product_rel(r, s));
          state.add(product_rel(s, r));
        }
      }
    }
    frontier = state.take_fresh();
  }
  all.insert(all.end(), frontier.begin(), frontier.end());
  std::sort(all.begin(), all.end());
  return all;
}

BoundedAnswer is_expressible_bounded(const Relation& s, const RelationalDatabase& db,
                                     const ClosureBounds& bounds) {
  for (Element e : s.flat()) {
    if (e < 1 || static_cast<std::size_t>(e) > db.universe_size()) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "element " + std::to_string(e) + " is not in the database universe");
    }
  }
  if (s.is_empty() || s.arity() > bounds.max_arity) return BoundedAnswer::kUnknown;
  const auto closure = bi_closure_bounded(db, bounds);
  return std::binary_search(closure.begin(), closure.end(), s) ? BoundedAnswer::kYes
                                                               : BoundedAnswer::kUnknown;
}

}  // namespace expresso
