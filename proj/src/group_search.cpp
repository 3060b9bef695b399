#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "expresso/error.hpp"
#include "expresso/permutation.hpp"

namespace expresso {

namespace {

// Backtracking search for R-compatible permutations. Elements are assigned in
// decreasing order of tuple participation; a tuple is checked as soon as its
// last component receives an image.
class AutSearch {
 public:
  explicit AutSearch(const RelationalDatabase& db) : db_(db), n_(db.universe_size()) {
    std::vector<std::size_t> participation(n_ + 1, 0);
    for (const auto& nr : db.relations()) {
      for (Element e : nr.relation.flat()) ++participation[static_cast<std::size_t>(e)];
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) {
      return participation[static_cast<std::size_t>(a)] > participation[static_cast<std::size_t>(b)];
    });
    std::vector<std::size_t> step_of(n_ + 1);
    for (std::size_t s = 0; s < n_; ++s) step_of[static_cast<std::size_t>(order_[s])] = s;

    checks_.resize(n_);
    for (std::size_t r = 0; r < db.relations().size(); ++r) {
      const Relation& rel = db.relations()[r].relation;
      for (std::size_t t = 0; t < rel.size(); ++t) {
        std::size_t last = 0;
        for (Element e : rel.tuple(t)) last = std::max(last, step_of[static_cast<std::size_t>(e)]);
        checks_[last].push_back({r, t});
      }
    }
    image_.assign(n_ + 1, 0);
    used_.assign(n_ + 1, false);
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  struct Check {
    std::size_t relation;
    std::size_t tuple;
  };

  bool consistent(std::size_t step) {
    for (const auto& [r, t] : checks_[step]) {
      const Relation& rel = db_.relations()[r].relation;
      auto src = rel.tuple(t);
      scratch_.resize(src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        scratch_[c] = image_[static_cast<std::size_t>(src[c])];
      }
      if (!rel.contains(scratch_)) return false;
    }
    return true;
  }

  void extend(std::size_t step) {
    if (step == n_) {
      found_.emplace_back(std::vector<Element>(image_.begin() + 1, image_.end()));
      return;
    }
    const Element x = order_[step];
    for (Element y = 1; static_cast<std::size_t>(y) <= n_; ++y) {
      if (used_[static_cast<std::size_t>(y)]) continue;
      image_[static_cast<std::size_t>(x)] = y;
      used_[static_cast<std::size_t>(y)] = true;
      if (consistent(step)) extend(step + 1);
      used_[static_cast<std::size_t>(y)] = false;
    }
    image_[static_cast<std::size_t>(x)] = 0;
  }

  const RelationalDatabase& db_;
  std::size_t n_;
  std::vector<Element> order_;
  std::vector<std::vector<Check>> checks_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  Tuple scratch_;
  std::vector<Permutation> found_;
};

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0;
    for (auto w : b) h = h * 0x9E3779B97F4A7C15ull ^ w;
    return h;
  }
};

// Subgroups as bitsets over the element indices of a fixed ambient group.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const PermutationGroup& g) : g_(g), words_((g.order() + 63) / 64) {
    for (std::size_t i = 0; i < g.order(); ++i) index_.emplace(g.elements()[i], i);
    right_.resize(g.order());
  }

  std::vector<Bits> enumerate() {
    const auto reps = cyclic_representatives();
    std::vector<Bits> found;
    std::vector<std::vector<std::size_t>> gens;
    std::unordered_map<Bits, std::size_t, BitsHash> known;

    Bits trivial(words_, 0);
    set(trivial, 0);
    found.push_back(trivial);
    gens.emplace_back();
    known.emplace(trivial, 0);

    // Every subgroup K arises from a smaller subgroup H < K by adjoining one
    // cyclic subgroup of K not contained in H.
    for (std::size_t h = 0; h < found.size(); ++h) {
      for (std::size_t c : reps) {
        if (test(found[h], c)) continue;
        auto next_gens = gens[h];
        next_gens.push_back(c);
        Bits k = close(next_gens);
        if (known.emplace(k, found.size()).second) {
          found.push_back(std::move(k));
          gens.push_back(std::move(next_gens));
        }
      }
    }
    return found;
  }

  // Ascending element order is inherited from the ambient group.
  std::vector<Permutation> members(const Bits& b) const {
    std::vector<Permutation> elems;
    for (std::size_t i = 0; i < g_.order(); ++i) {
      if (test(b, i)) elems.push_back(g_.elements()[i]);
    }
    return elems;
  }

 private:
  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

  const std::vector<std::size_t>& right_column(std::size_t s) {
    auto& col = right_[s];
    if (col.empty()) {
      col.resize(g_.order());
      const auto& gen = g_.elements()[s];
      for (std::size_t i = 0; i < g_.order(); ++i) col[i] = index_.at(g_.elements()[i] * gen);
    }
    return col;
  }

  Bits close(const std::vector<std::size_t>& gens) {
    Bits out(words_, 0);
    std::vector<std::size_t> queue{0};
    set(out, 0);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t s : gens) {
        const std::size_t next = right_column(s)[queue[q]];
        if (!test(out, next)) {
          set(out, next);
          queue.push_back(next);
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> cyclic_representatives() {
    std::vector<std::size_t> reps;
    std::unordered_map<Bits, std::size_t, BitsHash> seen;
    for (std::size_t i = 1; i < g_.order(); ++i) {
      if (seen.emplace(close({i}), i).second) reps.push_back(i);
    }
    return reps;
  }

  const PermutationGroup& g_;
  std::size_t words_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::vector<std::size_t>> right_;
};

}  // namespace

PermutationGroup aut(const RelationalDatabase& db) {
  auto elems = AutSearch(db).run();
  std::sort(elems.begin(), elems.end());
  return PermutationGroup(PermutationGroup::Trusted{}, db.universe_size(), std::move(elems));
}

std::vector<PermutationGroup> subgroups(const PermutationGroup& g, const Limits& limits) {
  if (g.order() > limits.subgroup_order_cap) {
    throw Error(ErrorCode::kResourceLimit, "group of order " + std::to_string(g.order()) +
                                               " exceeds subgroup cap " +
                                               std::to_string(limits.subgroup_order_cap));
  }
  SubgroupLattice lattice(g);
  std::vector<PermutationGroup> out;
  for (const auto& bits : lattice.enumerate()) {
    out.push_back(PermutationGroup(PermutationGroup::Trusted{}, g.degree(), lattice.members(bits)));
  }
  std::sort(out.begin(), out.end(), [](const PermutationGroup& a, const PermutationGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace expresso
