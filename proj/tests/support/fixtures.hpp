#pragma once

#include <string>

#include "expresso/graph.hpp"
#include "expresso/relation.hpp"
#include "expresso/text_format.hpp"

namespace fx {

using namespace expresso;

inline std::string path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline const Relation& r1() {
  static const Relation r(2, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  return r;
}
inline const Relation& r2() {
  static const Relation r(2, {{1, 3}, {3, 1}, {2, 4}, {4, 2}});
  return r;
}
inline const Relation& r3() {
  static const Relation r(2, {{1, 4}, {4, 1}, {2, 3}, {3, 2}});
  return r;
}

inline RelationalDatabase klein() { return RelationalDatabase(4, {{"R1", r1()}, {"R2", r2()}, {"R3", r3()}}); }
inline RelationalDatabase db_of(std::initializer_list<Relation> rels) {
  std::vector<NamedRelation> named;
  int i = 0;
  for (const auto& r : rels) named.push_back({"R" + std::to_string(++i), r});
  std::size_t n = 0;
  for (const auto& nr : named) n = std::max<std::size_t>(n, static_cast<std::size_t>(nr.relation.max_element()));
  return RelationalDatabase(n, std::move(named));
}

inline const Relation& five_r() {
  static const Relation r(5, {{1, 2, 3, 4, 5}, {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}});
  return r;
}
inline const Relation& five_s() {
  static const Relation s(5, {{1, 2, 3, 4, 5}, {2, 3, 5, 1, 4}, {3, 5, 4, 2, 1}, {5, 4, 1, 3, 2}, {4, 1, 2, 5, 3}});
  return s;
}

// Schema a -> b with Ext(a) = {x1,x2}, Ext(b) = {y1,y2}. colors[i][j] is the
// color of (x_{i+1}, y_{j+1}).
inline GraphDatabase two_by_two(bool c11, bool c12, bool c21, bool c22) {
  Schema schema({"a", "b"}, {{"ab", 0, 1}});
  Structure structure({"x1", "x2", "y1", "y2"},
                      {{0, 2, c11}, {0, 3, c12}, {1, 2, c21}, {1, 3, c22}});
  return GraphDatabase::checked(std::move(schema), std::move(structure), {0b0011, 0b1100});
}
inline GraphDatabase twobytwo() { return two_by_two(true, false, false, true); }
inline GraphDatabase skew() { return two_by_two(true, true, false, false); }
inline GraphDatabase alltrue() { return two_by_two(true, true, true, true); }

// Structure vertex indices in the fixtures above.
inline constexpr std::size_t X1 = 0, X2 = 1, Y1 = 2, Y2 = 3;

inline Instance inst(const GraphDatabase& db, std::vector<VertexSet> images) {
  images.resize(db.schema().vertex_count(), 0);
  return make_instance(db, std::move(images));
}

}  // namespace fx
