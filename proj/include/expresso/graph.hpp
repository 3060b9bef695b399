#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace expresso {

// Vertex sets are bitmasks, so schemas and structures hold at most 64
// vertices each. Bit i stands for vertex index i.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxGraphVertices = 64;

inline VertexSet bit(std::size_t i) { return VertexSet{1} << i; }
inline bool has(VertexSet s, std::size_t i) { return (s >> i) & 1u; }
inline std::size_t count(VertexSet s) { return static_cast<std::size_t>(std::popcount(s)); }
std::vector<std::size_t> members(VertexSet s);

struct SchemaEdge {
  std::string label;
  std::size_t from;
  std::size_t to;
};

class Schema {
 public:
  Schema() = default;
  Schema(std::vector<std::string> vertex_labels, std::vector<SchemaEdge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> find(const std::string& label) const;
  const std::vector<SchemaEdge>& edges() const noexcept { return edges_; }
  // Index of the edge (u, w), if present.
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t w) const;
  VertexSet all() const;

  // Weak connectivity of the subgraph induced by `vs`. Self-loops add nothing.
  bool induces_connected(VertexSet vs) const;

 private:
  std::vector<std::string> labels_;
  std::vector<SchemaEdge> edges_;
};

struct StructureEdge {
  std::size_t from;
  std::size_t to;
  bool color;
};

class Structure {
 public:
  Structure() = default;
  Structure(std::vector<std::string> vertex_labels, std::vector<StructureEdge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> find(const std::string& label) const;
  const std::vector<StructureEdge>& edges() const noexcept { return edges_; }
  // Color of the edge (y1, y2), if the edge exists.
  std::optional<bool> color(std::size_t y1, std::size_t y2) const;

 private:
  std::vector<std::string> labels_;
  std::vector<StructureEdge> edges_;
  std::vector<std::int8_t> matrix_;  // -1 none, 0 false, 1 true
};

// Schema, structure and the extension map. Construction stores the parts as
// given; validate() reports every violation of the well-formedness rules and
// GraphDatabase::checked() throws kInvalidDatabase on the first one.
class GraphDatabase {
 public:
  GraphDatabase(Schema schema, Structure structure, std::vector<VertexSet> ext);
  static GraphDatabase checked(Schema schema, Structure structure, std::vector<VertexSet> ext);

  const Schema& schema() const noexcept { return schema_; }
  const Structure& structure() const noexcept { return structure_; }
  VertexSet ext(std::size_t x) const { return ext_.at(x); }
  const std::vector<VertexSet>& ext() const noexcept { return ext_; }
  // Ext^-1(y). Only meaningful on a valid database.
  std::size_t name_of(std::size_t y) const { return name_of_.at(y); }
  VertexSet names(VertexSet ys) const;  // as a schema-vertex mask

  std::vector<std::string> validate() const;

  friend bool operator==(const GraphDatabase& a, const GraphDatabase& b);

 private:
  Schema schema_;
  Structure structure_;
  std::vector<VertexSet> ext_;
  std::vector<std::size_t> name_of_;
};

// A restriction of Ext: images()[x] is f(x), with 0 meaning x is outside Dom(f).
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<VertexSet> images) : images_(std::move(images)) {}

  const std::vector<VertexSet>& images() const noexcept { return images_; }
  VertexSet at(std::size_t x) const { return images_.at(x); }
  VertexSet domain() const;
  VertexSet image() const;
  // f <= g: Dom(f) within Dom(g) and f(x) within g(x) pointwise.
  bool restricts(const Instance& g) const;

  friend bool operator==(const Instance&, const Instance&) = default;
  friend auto operator<=>(const Instance&, const Instance&) = default;

 private:
  std::vector<VertexSet> images_;
};

// Validates the restriction and connectivity invariants; throws
// kDomainMismatch, kEmptyInstance or kNotWeaklyConnected.
Instance make_instance(const GraphDatabase& db, std::vector<VertexSet> images);
bool is_instance(const GraphDatabase& db, const Instance& f);
Instance ext_instance(const GraphDatabase& db);
// Ext restricted to a connected set of names.
Instance ext_restricted(const GraphDatabase& db, VertexSet names);

Instance add(const GraphDatabase& db, const Instance& f1, const Instance& f2);
Instance mult(const GraphDatabase& db, const Instance& f1, const Instance& f2);
Instance project_inst(const GraphDatabase& db, const Instance& f, VertexSet names);
Instance diff(const GraphDatabase& db, const Instance& f1, const Instance& f2);

struct SelectorEdge {
  std::size_t edge;  // schema edge index
  bool color;
  friend auto operator<=>(const SelectorEdge&, const SelectorEdge&) = default;
};

struct Selector {
  VertexSet vertices = 0;           // schema vertices
  std::vector<SelectorEdge> edges;  // sorted by edge index
  friend auto operator<=>(const Selector&, const Selector&) = default;
  friend bool operator==(const Selector&, const Selector&) = default;
};

// Throws kNotWeaklyConnected or kDomainMismatch for malformed selectors.
void check_selector(const GraphDatabase& db, const Selector& sel);
// Every selector of the schema: connected subgraphs times all colorings.
std::vector<Selector> all_selectors(const GraphDatabase& db);

std::set<Instance> simple_instances(const GraphDatabase& db, const Selector& sel);
// Sum of the simple instances of sel that restrict f. Throws kDomainMismatch
// when the selector leaves Dom(f) and kEmptySelection when nothing matches.
Instance select(const GraphDatabase& db, const Instance& f, const Selector& sel);

// "a: {x1,x2}" lines in schema vertex order.
std::string to_string(const GraphDatabase& db, const Instance& f);
std::string set_to_string(const GraphDatabase& db, VertexSet ys);

}  // namespace expresso
