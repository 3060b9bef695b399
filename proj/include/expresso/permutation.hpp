#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "expresso/limits.hpp"
#include "expresso/relation.hpp"

namespace expresso {

class Partition;

// A bijection on {1..n}, stored as the image sequence (psi(1), ..., psi(n)).
//
// Composition applies the right operand first: (g * h)(x) = g(h(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);
  // Builds a permutation from disjoint cycles, e.g. {{1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Element>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<Element>& images() const noexcept { return images_; }
  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  // "(1 2)(3 4)"; the identity prints as "()".
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// A finite permutation group, elements kept in lexicographic order of their
// image sequences. The identity (1, 2, ..., n) therefore always comes first.
class PermutationGroup {
 public:
  // Verifies identity, closure under composition and equal degrees; throws
  // ErrorCode::kNotAGroup otherwise.
  PermutationGroup(std::size_t degree, std::vector<Permutation> elements);

  static PermutationGroup trivial(std::size_t degree);
  static PermutationGroup symmetric(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& g) const;

  friend bool operator==(const PermutationGroup&, const PermutationGroup&) = default;
  friend auto operator<=>(const PermutationGroup&, const PermutationGroup&) = default;

 private:
  struct Trusted {};
  PermutationGroup(Trusted, std::size_t degree, std::vector<Permutation> sorted_elements)
      : degree_(degree), elements_(std::move(sorted_elements)) {}

  friend PermutationGroup group_closure(std::size_t, const std::vector<Permutation>&);
  friend std::vector<PermutationGroup> subgroups(const PermutationGroup&, const Limits&);
  friend PermutationGroup aut(const RelationalDatabase&);
  friend PermutationGroup stabilizer(const PermutationGroup&, Element);

  std::size_t degree_;
  std::vector<Permutation> elements_;
};

// True iff every tuple of r is mapped into r componentwise.
bool is_compatible(const Permutation& psi, const Relation& r);

// Aut(R): all permutations of U compatible with every relation of db.
PermutationGroup aut(const RelationalDatabase& db);

// cgr(R): arity-n relation with one row (psi(1), ..., psi(n)) per automorphism.
Relation cgr(const RelationalDatabase& db);
Relation cogroup_relation(const PermutationGroup& g);

// Smallest group of the given degree containing `generators`.
PermutationGroup group_closure(std::size_t degree, const std::vector<Permutation>& generators);

// Every subgroup of g, ordered by (order, elements). Throws kResourceLimit when
// |g| exceeds limits.subgroup_order_cap.
std::vector<PermutationGroup> subgroups(const PermutationGroup& g, const Limits& limits = {});

Partition orbits(const PermutationGroup& g);
Partition cycles(const Permutation& psi);
PermutationGroup stabilizer(const PermutationGroup& g, Element x);

// (G : H). Throws kNotASubgroup when h is not contained in g.
std::size_t index(const PermutationGroup& g, const PermutationGroup& h);

}  // namespace expresso
