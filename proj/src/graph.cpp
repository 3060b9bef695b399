#include "expresso/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "expresso/error.hpp"

namespace expresso {

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

namespace {

constexpr std::size_t kNoName = std::numeric_limits<std::size_t>::max();

void check_size(std::size_t n, const char* what) {
  if (n > kMaxGraphVertices) {
    throw Error(ErrorCode::kInvalidDatabase, std::string(what) + " has more than 64 vertices");
  }
}

template <typename Labels>
std::optional<std::size_t> find_label(const Labels& labels, const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

// ---------------------------------------------------------------------------

Schema::Schema(std::vector<std::string> vertex_labels, std::vector<SchemaEdge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
  check_size(labels_.size(), "schema");
  for (const auto& e : edges_) {
    if (e.from >= labels_.size() || e.to >= labels_.size()) {
      throw Error(ErrorCode::kInvalidDatabase, "schema edge " + e.label + " has an unknown endpoint");
    }
  }
}

std::optional<std::size_t> Schema::find(const std::string& label) const {
  return find_label(labels_, label);
}

std::optional<std::size_t> Schema::edge_between(std::size_t u, std::size_t w) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].from == u && edges_[i].to == w) return i;
  }
  return std::nullopt;
}

VertexSet Schema::all() const {
  return labels_.size() == 64 ? ~VertexSet{0} : bit(labels_.size()) - 1;
}

bool Schema::induces_connected(VertexSet vs) const {
  if (vs == 0) return false;
  VertexSet reached = vs & (~vs + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : edges_) {
      if (!has(vs, e.from) || !has(vs, e.to)) continue;
      const bool a = has(reached, e.from);
      const bool b = has(reached, e.to);
      if (a != b) {
        reached |= bit(e.from) | bit(e.to);
        grew = true;
      }
    }
  }
  return reached == vs;
}

// ---------------------------------------------------------------------------

Structure::Structure(std::vector<std::string> vertex_labels, std::vector<StructureEdge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
  check_size(labels_.size(), "structure");
  const std::size_t n = labels_.size();
  matrix_.assign(n * n, -1);
  for (const auto& e : edges_) {
    if (e.from >= n || e.to >= n) {
      throw Error(ErrorCode::kInvalidDatabase, "structure edge has an unknown endpoint");
    }
    matrix_[e.from * n + e.to] = e.color ? 1 : 0;
  }
}

std::optional<std::size_t> Structure::find(const std::string& label) const {
  return find_label(labels_, label);
}

std::optional<bool> Structure::color(std::size_t y1, std::size_t y2) const {
  const auto c = matrix_.at(y1 * labels_.size() + y2);
  if (c < 0) return std::nullopt;
  return c == 1;
}

// ---------------------------------------------------------------------------

GraphDatabase::GraphDatabase(Schema schema, Structure structure, std::vector<VertexSet> ext)
    : schema_(std::move(schema)), structure_(std::move(structure)), ext_(std::move(ext)) {
  if (ext_.size() != schema_.vertex_count()) {
    throw Error(ErrorCode::kInvalidDatabase, "extension map does not cover the schema");
  }
  name_of_.assign(structure_.vertex_count(), kNoName);
  for (std::size_t x = ext_.size(); x-- > 0;) {
    for (std::size_t y : members(ext_[x])) {
      if (y >= structure_.vertex_count()) {
        throw Error(ErrorCode::kInvalidDatabase, "extension of " + schema_.label(x) +
                                                     " mentions an unknown structure vertex");
      }
      name_of_[y] = x;
    }
  }
}

GraphDatabase GraphDatabase::checked(Schema schema, Structure structure, std::vector<VertexSet> ext) {
  GraphDatabase db(std::move(schema), std::move(structure), std::move(ext));
  const auto problems = db.validate();
  if (!problems.empty()) throw Error(ErrorCode::kInvalidDatabase, problems.front());
  return db;
}

VertexSet GraphDatabase::names(VertexSet ys) const {
  VertexSet out = 0;
  for (std::size_t y : members(ys)) out |= bit(name_of(y));
  return out;
}

std::vector<std::string> GraphDatabase::validate() const {
  std::vector<std::string> out;
  const auto& sl = schema_.labels();
  for (std::size_t i = 0; i < sl.size(); ++i) {
    for (std::size_t j = i + 1; j < sl.size(); ++j) {
      if (sl[i] == sl[j]) out.push_back("schema vertex label " + sl[i] + " is not unique");
    }
  }
  const auto& se = schema_.edges();
  for (std::size_t i = 0; i < se.size(); ++i) {
    for (std::size_t j = i + 1; j < se.size(); ++j) {
      if (se[i].label == se[j].label) out.push_back("schema edge label " + se[i].label + " is not unique");
      if (se[i].from == se[j].from && se[i].to == se[j].to) {
        out.push_back("schema edges " + se[i].label + " and " + se[j].label + " join the same pair");
      }
    }
  }
  if (sl.empty()) {
    out.push_back("schema has no vertices");
  } else if (!schema_.induces_connected(schema_.all())) {
    out.push_back("schema is not weakly connected");
  }

  const auto& tl = structure_.labels();
  for (std::size_t i = 0; i < tl.size(); ++i) {
    for (std::size_t j = i + 1; j < tl.size(); ++j) {
      if (tl[i] == tl[j]) out.push_back("structure vertex label " + tl[i] + " is not unique");
    }
  }
  // Edges carry the implicit label (from, to), so a repeated pair breaks injectivity.
  const auto& te = structure_.edges();
  for (std::size_t i = 0; i < te.size(); ++i) {
    for (std::size_t j = i + 1; j < te.size(); ++j) {
      if (te[i].from == te[j].from && te[i].to == te[j].to) {
        out.push_back("structure edge (" + tl[te[i].from] + "," + tl[te[i].to] + ") appears twice");
      }
    }
  }

  // Condition 1: the images of Ext partition V'.
  VertexSet covered = 0;
  for (std::size_t x = 0; x < ext_.size(); ++x) {
    if (ext_[x] == 0) out.push_back("Ext(" + sl[x] + ") is empty");
    if ((covered & ext_[x]) != 0) {
      out.push_back("Ext(" + sl[x] + ") overlaps another extension at " +
                    set_to_string(*this, covered & ext_[x]));
    }
    covered |= ext_[x];
  }
  for (std::size_t y = 0; y < tl.size(); ++y) {
    if (!has(covered, y)) out.push_back("structure vertex " + tl[y] + " belongs to no schema vertex");
  }

  // Condition 2: (x, y) in E' iff (Ext^-1(x), Ext^-1(y)) in E.
  for (std::size_t u = 0; u < ext_.size(); ++u) {
    for (std::size_t w = 0; w < ext_.size(); ++w) {
      const bool schema_edge = schema_.edge_between(u, w).has_value();
      for (std::size_t x : members(ext_[u])) {
        for (std::size_t y : members(ext_[w])) {
          if (structure_.color(x, y).has_value() != schema_edge) {
            const std::string pair = "(" + sl[u] + "," + sl[w] + ")";
            out.push_back("edge (" + tl[x] + "," + tl[y] + ") " +
                          (schema_edge ? "is missing although schema edge " + pair + " exists"
                                       : "exists although there is no schema edge " + pair));
          }
        }
      }
    }
  }
  return out;
}

bool operator==(const GraphDatabase& a, const GraphDatabase& b) {
  if (a.schema_.labels() != b.schema_.labels() || a.structure_.labels() != b.structure_.labels() ||
      a.ext_ != b.ext_ || a.schema_.edges().size() != b.schema_.edges().size() ||
      a.structure_.edges().size() != b.structure_.edges().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.schema_.edges().size(); ++i) {
    const auto& e = a.schema_.edges()[i];
    const auto& f = b.schema_.edges()[i];
    if (e.label != f.label || e.from != f.from || e.to != f.to) return false;
  }
  for (const auto& e : a.structure_.edges()) {
    if (b.structure_.color(e.from, e.to) != std::optional<bool>(e.color)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

VertexSet Instance::domain() const {
  VertexSet d = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != 0) d |= bit(x);
  }
  return d;
}

VertexSet Instance::image() const {
  VertexSet im = 0;
  for (VertexSet s : images_) im |= s;
  return im;
}

bool Instance::restricts(const Instance& g) const {
  if (images_.size() != g.images_.size()) return false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if ((images_[x] & ~g.images_[x]) != 0) return false;
  }
  return true;
}

bool is_instance(const GraphDatabase& db, const Instance& f) {
  if (f.images().size() != db.schema().vertex_count()) return false;
  for (std::size_t x = 0; x < f.images().size(); ++x) {
    if ((f.images()[x] & ~db.ext(x)) != 0) return false;
  }
  return db.schema().induces_connected(f.domain());
}

Instance make_instance(const GraphDatabase& db, std::vector<VertexSet> images) {
  if (images.size() != db.schema().vertex_count()) {
    throw Error(ErrorCode::kDomainMismatch, "instance over a different schema");
  }
  for (std::size_t x = 0; x < images.size(); ++x) {
    if ((images[x] & ~db.ext(x)) != 0) {
      throw Error(ErrorCode::kDomainMismatch, "image of " + db.schema().label(x) + " leaves Ext(" +
                                                  db.schema().label(x) + ")");
    }
  }
  Instance f(std::move(images));
  const VertexSet dom = f.domain();
  if (dom == 0) throw Error(ErrorCode::kEmptyInstance, "instance has an empty domain");
  if (!db.schema().induces_connected(dom)) {
    throw Error(ErrorCode::kNotWeaklyConnected, "instance domain is not weakly connected");
  }
  return f;
}

Instance ext_instance(const GraphDatabase& db) { return make_instance(db, db.ext()); }

Instance ext_restricted(const GraphDatabase& db, VertexSet names) {
  std::vector<VertexSet> images(db.schema().vertex_count(), 0);
  for (std::size_t x : members(names)) images.at(x) = db.ext(x);
  return make_instance(db, std::move(images));
}

namespace {

void same_domain(const Instance& f1, const Instance& f2) {
  if (f1.images().size() != f2.images().size() || f1.domain() != f2.domain()) {
    throw Error(ErrorCode::kDomainMismatch, "operands have different domains");
  }
}

}  // namespace

Instance add(const GraphDatabase& db, const Instance& f1, const Instance& f2) {
  same_domain(f1, f2);
  std::vector<VertexSet> images(f1.images().size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = f1.at(x) | f2.at(x);
  return make_instance(db, std::move(images));
}

Instance mult(const GraphDatabase& db, const Instance& f1, const Instance& f2) {
  if (f1.images().size() != f2.images().size()) {
    throw Error(ErrorCode::kDomainMismatch, "operands over different schemas");
  }
  std::vector<VertexSet> images(f1.images().size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    const VertexSet a = f1.at(x);
    const VertexSet b = f2.at(x);
    images[x] = (a != 0 && b != 0) ? (a & b) : (a | b);
  }
  return make_instance(db, std::move(images));
}

Instance project_inst(const GraphDatabase& db, const Instance& f, VertexSet names) {
  if ((names & ~f.domain()) != 0) {
    throw Error(ErrorCode::kNotSubdomain, "projection names leave the instance domain");
  }
  if (!db.schema().induces_connected(names)) {
    throw Error(ErrorCode::kNotWeaklyConnected, "projection names are not weakly connected");
  }
  std::vector<VertexSet> images(f.images().size(), 0);
  for (std::size_t x : members(names)) images[x] = f.at(x);
  return make_instance(db, std::move(images));
}

Instance diff(const GraphDatabase& db, const Instance& f1, const Instance& f2) {
  same_domain(f1, f2);
  std::vector<VertexSet> images(f1.images().size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = f1.at(x) & ~f2.at(x);
  return make_instance(db, std::move(images));
}

// ---------------------------------------------------------------------------

void check_selector(const GraphDatabase& db, const Selector& sel) {
  const auto& edges = db.schema().edges();
  if ((sel.vertices & ~db.schema().all()) != 0 || sel.vertices == 0) {
    throw Error(ErrorCode::kDomainMismatch, "selector vertices are not schema vertices");
  }
  VertexSet reached = sel.vertices & (~sel.vertices + 1);
  for (const auto& se : sel.edges) {
    if (se.edge >= edges.size() || !has(sel.vertices, edges[se.edge].from) ||
        !has(sel.vertices, edges[se.edge].to)) {
      throw Error(ErrorCode::kDomainMismatch, "selector edge outside its vertex set");
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& se : sel.edges) {
      const auto& e = edges[se.edge];
      if (has(reached, e.from) != has(reached, e.to)) {
        reached |= bit(e.from) | bit(e.to);
        grew = true;
      }
    }
  }
  if (reached != sel.vertices) {
    throw Error(ErrorCode::kNotWeaklyConnected, "selector subgraph is not weakly connected");
  }
}

std::vector<Selector> all_selectors(const GraphDatabase& db) {
  const auto& schema = db.schema();
  const std::size_t n = schema.vertex_count();
  if (n > 20) throw Error(ErrorCode::kResourceLimit, "selector enumeration over more than 20 names");
  std::vector<Selector> out;
  for (VertexSet vs = 1; vs < bit(n); ++vs) {
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < schema.edges().size(); ++i) {
      if (has(vs, schema.edges()[i].from) && has(vs, schema.edges()[i].to)) inner.push_back(i);
    }
    if (inner.size() > 20) throw Error(ErrorCode::kResourceLimit, "too many selector edges");
    for (std::uint64_t es = 0; es < (std::uint64_t{1} << inner.size()); ++es) {
      Selector sel{vs, {}};
      for (std::size_t j = 0; j < inner.size(); ++j) {
        if ((es >> j) & 1u) sel.edges.push_back({inner[j], false});
      }
      try {
        check_selector(db, sel);
      } catch (const Error&) {
        continue;
      }
      const std::size_t m = sel.edges.size();
      for (std::uint64_t cs = 0; cs < (std::uint64_t{1} << m); ++cs) {
        for (std::size_t j = 0; j < m; ++j) sel.edges[j].color = (cs >> j) & 1u;
        out.push_back(sel);
      }
    }
  }
  return out;
}

std::set<Instance> simple_instances(const GraphDatabase& db, const Selector& sel) {
  check_selector(db, sel);
  const auto names = members(sel.vertices);
  const auto& edges = db.schema().edges();
  std::vector<VertexSet> images(db.schema().vertex_count(), 0);
  std::vector<std::size_t> chosen(db.schema().vertex_count(), 0);
  std::set<Instance> out;

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == names.size()) {
      out.insert(Instance(images));
      return;
    }
    const std::size_t x = names[i];
    for (std::size_t y : members(db.ext(x))) {
      chosen[x] = y;
      images[x] = bit(y);
      bool ok = true;
      // Check every selector edge whose endpoints are both assigned by now.
      for (const auto& se : sel.edges) {
        const auto& e = edges[se.edge];
        if (e.from != x && e.to != x) continue;
        if (images[e.from] == 0 || images[e.to] == 0) continue;
        if (db.structure().color(chosen[e.from], chosen[e.to]) != std::optional<bool>(se.color)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(i + 1);
      images[x] = 0;
    }
  };
  assign(0);
  return out;
}

Instance select(const GraphDatabase& db, const Instance& f, const Selector& sel) {
  if ((sel.vertices & ~f.domain()) != 0) {
    throw Error(ErrorCode::kDomainMismatch, "selector names leave the instance domain");
  }
  std::vector<VertexSet> images(f.images().size(), 0);
  bool any = false;
  for (const auto& s : simple_instances(db, sel)) {
    if (!s.restricts(f)) continue;
    any = true;
    for (std::size_t x = 0; x < images.size(); ++x) images[x] |= s.at(x);
  }
  if (!any) throw Error(ErrorCode::kEmptySelection, "no simple instance of the selector lies below f");
  return make_instance(db, std::move(images));
}

std::string set_to_string(const GraphDatabase& db, VertexSet ys) {
  std::string out = "{";
  bool first = true;
  for (std::size_t y : members(ys)) {
    if (!first) out += ',';
    first = false;
    out += db.structure().label(y);
  }
  return out + "}";
}

std::string to_string(const GraphDatabase& db, const Instance& f) {
  std::string out;
  for (std::size_t x = 0; x < f.images().size(); ++x) {
    if (f.at(x) == 0) continue;
    out += db.schema().label(x) + ": " + set_to_string(db, f.at(x)) + "\n";
  }
  return out;
}

}  // namespace expresso
