#include "expresso/relation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "expresso/error.hpp"

namespace expresso {

namespace {

bool tuple_less(std::span<const Element> a, std::span<const Element> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_position(const Relation& r, std::size_t j, const char* what) {
  if (j < 1 || j > r.arity()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                std::string(what) + " position " + std::to_string(j) +
                    " outside 1.." + std::to_string(r.arity()));
  }
}

}  // namespace

Relation::Relation(std::size_t arity, std::vector<Tuple> tuples) : arity_(arity) {
  if (arity == 0) throw Error(ErrorCode::kInvalidRelation, "arity must be positive");
  if (tuples.empty()) throw Error(ErrorCode::kInvalidRelation, "tuple set must be nonempty");
  data_.reserve(arity * tuples.size());
  for (const auto& t : tuples) {
    if (t.size() != arity) {
      throw Error(ErrorCode::kInvalidRelation, "tuple of length " + std::to_string(t.size()) +
                                                   " in relation of arity " + std::to_string(arity));
    }
    data_.insert(data_.end(), t.begin(), t.end());
  }
  normalize();
}

Relation::Relation(std::size_t arity, std::vector<Element> flat, bool already_sorted)
    : arity_(arity), data_(std::move(flat)) {
  if (!already_sorted) normalize();
}

Relation Relation::empty(std::size_t arity) {
  if (arity == 0) throw Error(ErrorCode::kInvalidRelation, "arity must be positive");
  return Relation(arity, std::vector<Element>{}, true);
}

Relation make_relation_from_flat(std::size_t arity, std::vector<Element> flat) {
  if (arity == 0) throw Error(ErrorCode::kInvalidRelation, "arity must be positive");
  if (flat.size() % arity != 0) throw Error(ErrorCode::kInvalidRelation, "ragged tuple buffer");
  return Relation(arity, std::move(flat), false);
}

void Relation::normalize() {
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto at = [this](std::size_t i) { return std::span<const Element>(data_.data() + i * arity_, arity_); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return tuple_less(at(a), at(b)); });
  std::vector<Element> out;
  out.reserve(data_.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto t = at(order[k]);
    if (k > 0 && std::equal(t.begin(), t.end(), at(order[k - 1]).begin())) continue;
    out.insert(out.end(), t.begin(), t.end());
  }
  data_ = std::move(out);
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto t = tuple(i);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

bool Relation::contains(std::span<const Element> t) const {
  if (t.size() != arity_) return false;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (tuple_less(tuple(mid), t)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(t.begin(), t.end(), tuple(lo).begin());
}

Element Relation::max_element() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::strong_ordering operator<=>(const Relation& a, const Relation& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                b.data_.end());
}

std::size_t RelationHash::operator()(const Relation& r) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(r.arity());
  for (Element e : r.flat()) h = h * 1'000'003u ^ static_cast<std::size_t>(e);
  return h;
}

// ---------------------------------------------------------------------------

RelationalDatabase::RelationalDatabase(std::size_t universe_size,
                                       std::vector<NamedRelation> relations)
    : n_(universe_size), relations_(std::move(relations)) {
  if (n_ == 0) throw Error(ErrorCode::kInvalidDatabase, "empty universe");
  if (relations_.empty()) throw Error(ErrorCode::kInvalidDatabase, "no relations");
  std::vector<bool> seen(n_ + 1, false);
  std::set<std::string> names;
  for (const auto& [name, rel] : relations_) {
    if (!names.insert(name).second) {
      throw Error(ErrorCode::kInvalidDatabase, "duplicate relation name '" + name + "'");
    }
    if (rel.is_empty()) throw Error(ErrorCode::kInvalidDatabase, "relation '" + name + "' is empty");
    for (Element e : rel.flat()) {
      if (e < 1 || static_cast<std::size_t>(e) > n_) {
        throw Error(ErrorCode::kInvalidDatabase, "relation '" + name + "' mentions " +
                                                     std::to_string(e) + " outside 1.." +
                                                     std::to_string(n_));
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
  for (std::size_t e = 1; e <= n_; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kInvalidDatabase,
                  "element " + std::to_string(e) + " occurs in no relation (D(R) != U)");
    }
  }
  labels_.resize(n_);
  std::iota(labels_.begin(), labels_.end(), 1);
}

RelationalDatabase RelationalDatabase::from_labeled(std::vector<NamedRelation> labeled) {
  std::set<Element> domain;
  for (const auto& nr : labeled) domain.insert(nr.relation.flat().begin(), nr.relation.flat().end());
  std::map<Element, Element> canon;
  for (Element e : domain) canon.emplace(e, static_cast<Element>(canon.size() + 1));
  std::vector<NamedRelation> mapped;
  for (auto& nr : labeled) {
    std::vector<Element> flat = nr.relation.flat();
    for (auto& e : flat) e = canon.at(e);
    mapped.push_back({nr.name, make_relation_from_flat(nr.relation.arity(), std::move(flat))});
  }
  RelationalDatabase db(domain.size(), std::move(mapped));
  db.labels_.assign(domain.begin(), domain.end());
  return db;
}

const Relation& RelationalDatabase::relation(const std::string& name) const {
  for (const auto& nr : relations_) {
    if (nr.name == name) return nr.relation;
  }
  throw Error(ErrorCode::kInvalidDatabase, "no relation named '" + name + "'");
}

RelationalDatabase RelationalDatabase::with_relation(const std::string& name,
                                                     const Relation& s) const {
  for (Element e : s.flat()) {
    if (e < 1 || static_cast<std::size_t>(e) > n_) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "element " + std::to_string(e) + " is not in the database universe");
    }
  }
  auto rels = relations_;
  std::string fresh = name;
  while (std::any_of(rels.begin(), rels.end(), [&](const auto& nr) { return nr.name == fresh; })) {
    fresh += "'";
  }
  rels.push_back({fresh, s});
  RelationalDatabase out(n_, std::move(rels));
  out.labels_ = labels_;
  return out;
}

// ---------------------------------------------------------------------------

Relation union_rel(const Relation& r, const Relation& s) {
  if (r.arity() != s.arity()) {
    throw Error(ErrorCode::kArityMismatch, "union of arity " + std::to_string(r.arity()) +
                                               " and " + std::to_string(s.arity()));
  }
  std::vector<Element> flat = r.flat();
  flat.insert(flat.end(), s.flat().begin(), s.flat().end());
  return make_relation_from_flat(r.arity(), std::move(flat));
}

Relation product_rel(const Relation& r, const Relation& s) {
  const std::size_t arity = r.arity() + s.arity();
  std::vector<Element> flat;
  flat.reserve(arity * r.size() * s.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto a = r.tuple(i);
      auto b = s.tuple(j);
      flat.insert(flat.end(), a.begin(), a.end());
      flat.insert(flat.end(), b.begin(), b.end());
    }
  }
  return make_relation_from_flat(arity, std::move(flat));
}

Relation project(const Relation& r, std::span<const std::size_t> positions) {
  if (positions.empty()) throw Error(ErrorCode::kIndexOutOfRange, "projection onto no positions");
  for (std::size_t p : positions) check_position(r, p, "projection");
  std::vector<Element> flat;
  flat.reserve(positions.size() * r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto t = r.tuple(i);
    for (std::size_t p : positions) flat.push_back(t[p - 1]);
  }
  return make_relation_from_flat(positions.size(), std::move(flat));
}

namespace {

Relation restrict(const Relation& r, std::size_t j1, std::size_t j2, bool want_equal) {
  check_position(r, j1, "restriction");
  check_position(r, j2, "restriction");
  std::vector<Element> flat;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto t = r.tuple(i);
    if ((t[j1 - 1] == t[j2 - 1]) == want_equal) flat.insert(flat.end(), t.begin(), t.end());
  }
  return make_relation_from_flat(r.arity(), std::move(flat));
}

}  // namespace

Relation restrict_eq(const Relation& r, std::size_t j1, std::size_t j2) {
  return restrict(r, j1, j2, true);
}

Relation restrict_neq(const Relation& r, std::size_t j1, std::size_t j2) {
  return restrict(r, j1, j2, false);
}

std::set<Element> data_domain(const Relation& r) {
  return std::set<Element>(r.flat().begin(), r.flat().end());
}

std::set<Element> data_domain(const RelationalDatabase& db) {
  std::set<Element> out;
  for (const auto& nr : db.relations()) out.insert(nr.relation.flat().begin(), nr.relation.flat().end());
  return out;
}

}  // namespace expresso
