#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "expresso/limits.hpp"

namespace expresso {

// Domain elements are canonicalized to 1..n.
using Element = int;
using Tuple = std::vector<Element>;

// A finite set of fixed-arity tuples. Tuples are kept sorted and unique in one
// flat buffer, so value equality is buffer equality.
//
// The public constructor rejects empty tuple sets. Restrictions may still
// produce an empty result; that value is built with Relation::empty() and is
// only meaningful inside expression evaluation.
class Relation {
 public:
  Relation(std::size_t arity, std::vector<Tuple> tuples);
  Relation(std::size_t arity, std::initializer_list<Tuple> tuples)
      : Relation(arity, std::vector<Tuple>(tuples)) {}

  static Relation empty(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return arity_ == 0 ? 0 : data_.size() / arity_; }
  bool is_empty() const noexcept { return data_.empty(); }

  std::span<const Element> tuple(std::size_t i) const {
    return {data_.data() + i * arity_, arity_};
  }
  std::vector<Tuple> tuples() const;
  bool contains(std::span<const Element> t) const;
  const std::vector<Element>& flat() const noexcept { return data_; }
  Element max_element() const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend std::strong_ordering operator<=>(const Relation& a, const Relation& b);

 private:
  Relation(std::size_t arity, std::vector<Element> flat, bool already_sorted);
  void normalize();

  friend Relation make_relation_from_flat(std::size_t arity, std::vector<Element> flat);

  std::size_t arity_ = 0;
  std::vector<Element> data_;
};

struct RelationHash {
  std::size_t operator()(const Relation& r) const noexcept;
};

// Builds a relation (possibly empty) from arity-strided data in any order.
Relation make_relation_from_flat(std::size_t arity, std::vector<Element> flat);

struct NamedRelation {
  std::string name;
  Relation relation;
};

// <U, R> with U = {1..n}. Construction enforces that every tuple component lies
// in U and that the relations together mention every element of U.
class RelationalDatabase {
 public:
  RelationalDatabase(std::size_t universe_size, std::vector<NamedRelation> relations);

  // Maps arbitrary integer labels onto 1..n (ascending label order). The
  // original labels stay available through label().
  static RelationalDatabase from_labeled(std::vector<NamedRelation> labeled);

  std::size_t universe_size() const noexcept { return n_; }
  const std::vector<NamedRelation>& relations() const noexcept { return relations_; }
  const Relation& relation(const std::string& name) const;
  int label(Element e) const { return labels_.at(static_cast<std::size_t>(e - 1)); }

  // R ∪ {S}. S must be a nonempty relation over U.
  RelationalDatabase with_relation(const std::string& name, const Relation& s) const;

  friend bool operator==(const RelationalDatabase& a, const RelationalDatabase& b) {
    if (a.n_ != b.n_ || a.relations_.size() != b.relations_.size()) return false;
    for (std::size_t i = 0; i < a.relations_.size(); ++i) {
      if (a.relations_[i].name != b.relations_[i].name ||
          !(a.relations_[i].relation == b.relations_[i].relation))
        return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<NamedRelation> relations_;
  std::vector<int> labels_;
};

// The five operators. Positions are 1-based throughout.
Relation union_rel(const Relation& r, const Relation& s);
Relation product_rel(const Relation& r, const Relation& s);
Relation project(const Relation& r, std::span<const std::size_t> positions);
inline Relation project(const Relation& r, std::initializer_list<std::size_t> positions) {
  return project(r, std::span<const std::size_t>(positions.begin(), positions.size()));
}
Relation restrict_eq(const Relation& r, std::size_t j1, std::size_t j2);
Relation restrict_neq(const Relation& r, std::size_t j1, std::size_t j2);

std::set<Element> data_domain(const Relation& r);
std::set<Element> data_domain(const RelationalDatabase& db);

struct ClosureBounds {
  std::size_t max_arity = 0;
  std::size_t max_depth = 4;
  std::size_t relation_cap = Limits{}.relation_cap;
};

// max_arity = 2 * (largest input arity), max_depth = 4.
ClosureBounds default_bounds(const RelationalDatabase& db);

// Sound, incomplete under-approximation of BI(R): every relation reachable
// with at most max_depth rounds of operator applications while never
// materializing an arity above max_arity. Empty intermediates are dropped
// (they are units for union and absorbing for product) and never returned.
// Results are sorted.
std::vector<Relation> bi_closure_bounded(const RelationalDatabase& db, const ClosureBounds& bounds);

enum class BoundedAnswer { kYes, kUnknown };

BoundedAnswer is_expressible_bounded(const Relation& s, const RelationalDatabase& db,
                                     const ClosureBounds& bounds);

}  // namespace expresso
