#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "expresso/graph.hpp"
#include "expresso/permutation.hpp"
#include "expresso/relation.hpp"
#include "expresso/stability.hpp"

namespace gen {

using namespace expresso;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Element> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Sparse random permutation: a product of one or two short cycles, which keeps
// generated groups small and varied.
inline Permutation random_sparse_permutation(Rng& rng, std::size_t n) {
  std::vector<Element> pts(n);
  std::iota(pts.begin(), pts.end(), 1);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<std::vector<Element>> cycles;
  std::size_t used = 0;
  const std::size_t count = uniform(rng, 1, 2);
  for (std::size_t c = 0; c < count && used + 2 <= n; ++c) {
    const std::size_t len = uniform(rng, 2, std::min<std::size_t>(n - used, 5));
    cycles.emplace_back(pts.begin() + static_cast<long>(used), pts.begin() + static_cast<long>(used + len));
    used += len;
  }
  return Permutation::from_cycles(n, cycles);
}

// A random subgroup of S_n with order at most max_order.
inline PermutationGroup random_group(Rng& rng, std::size_t n, std::size_t max_order = 120) {
  while (true) {
    std::vector<Permutation> gens;
    const std::size_t count = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < count; ++i) {
      gens.push_back(coin(rng, 0.7) ? random_sparse_permutation(rng, n) : random_permutation(rng, n));
    }
    auto g = group_closure(n, gens);
    if (g.order() <= max_order) return g;
  }
}

inline Tuple random_tuple(Rng& rng, std::size_t n, std::size_t arity) {
  Tuple t(arity);
  for (auto& e : t) e = static_cast<Element>(uniform(rng, 1, n));
  return t;
}

// Union of the G-orbits of a few random tuples.
inline Relation orbit_relation(Rng& rng, const PermutationGroup& g, std::size_t arity, std::size_t seeds) {
  std::vector<Tuple> rows;
  for (std::size_t s = 0; s < seeds; ++s) {
    const Tuple t = random_tuple(rng, g.degree(), arity);
    for (const auto& p : g.elements()) {
      Tuple img(arity);
      for (std::size_t c = 0; c < arity; ++c) img[c] = p(t[c]);
      rows.push_back(std::move(img));
    }
  }
  return Relation(arity, std::move(rows));
}

inline Relation random_relation(Rng& rng, std::size_t n, std::size_t arity, std::size_t max_tuples = 8) {
  std::vector<Tuple> rows;
  const std::size_t count = uniform(rng, 1, max_tuples);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(random_tuple(rng, n, arity));
  return Relation(arity, std::move(rows));
}

// |U| in 2..max_n, 1..3 relations of arity 1..3, D(R) = U. Half of the
// databases are built from orbits of a random group so that Aut is nontrivial.
inline RelationalDatabase random_database(Rng& rng, std::size_t max_n = 6) {
  while (true) {
    const std::size_t n = uniform(rng, 2, max_n);
    const bool symmetric = coin(rng);
    const auto g = random_group(rng, n, 24);
    std::vector<NamedRelation> rels;
    const std::size_t count = uniform(rng, 1, 3);
    std::set<Element> seen;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t arity = uniform(rng, 1, 3);
      Relation r = symmetric ? orbit_relation(rng, g, arity, uniform(rng, 1, 2)) : random_relation(rng, n, arity);
      seen.insert(r.flat().begin(), r.flat().end());
      rels.push_back({"R" + std::to_string(i + 1), std::move(r)});
    }
    if (seen.size() == n) return RelationalDatabase(n, std::move(rels));
  }
}

// Candidate targets: database members, orbit unions under Aut, random relations.
inline Relation random_target(Rng& rng, const RelationalDatabase& db, const PermutationGroup& autg) {
  const std::size_t n = db.universe_size();
  switch (uniform(rng, 0, 3)) {
    case 0: return db.relations()[uniform(rng, 0, db.relations().size() - 1)].relation;
    case 1: return orbit_relation(rng, autg, uniform(rng, 1, 3), uniform(rng, 1, 2));
    case 2: {
      const auto h = random_group(rng, n, 24);
      return orbit_relation(rng, h, uniform(rng, 1, 3), 1);
    }
    default: return random_relation(rng, n, uniform(rng, 1, 3));
  }
}

// ---------------------------------------------------------------------------

// Connected schema with 2..4 vertices and no self-loops; 2..8 structure
// vertices. Colors come either from a coin per edge or from a table indexed
// by (edge, type of source, type of target), which produces symmetric
// structures with nontrivial canonical classes.
inline GraphDatabase random_graph_database(Rng& rng, std::size_t max_structure = 8) {
  const std::size_t names = uniform(rng, 2, 4);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < names; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 1; v < names; ++v) {
    const std::size_t u = uniform(rng, 0, v - 1);
    pairs.insert(coin(rng) ? std::make_pair(u, v) : std::make_pair(v, u));
  }
  const std::size_t extra = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t u = uniform(rng, 0, names - 1);
    const std::size_t w = uniform(rng, 0, names - 1);
    if (u != w) pairs.insert({u, w});
  }
  std::vector<SchemaEdge> edges;
  for (const auto& [u, w] : pairs) edges.push_back({labels[u] + labels[w], u, w});

  const std::size_t total = uniform(rng, names, std::max(names, max_structure));
  std::vector<std::size_t> sizes(names, 1);
  for (std::size_t i = names; i < total; ++i) ++sizes[uniform(rng, 0, names - 1)];
  std::vector<std::string> slabels;
  std::vector<VertexSet> ext(names, 0);
  std::vector<std::size_t> type;
  for (std::size_t x = 0; x < names; ++x) {
    for (std::size_t j = 0; j < sizes[x]; ++j) {
      ext[x] |= bit(slabels.size());
      slabels.push_back(labels[x] + std::to_string(j + 1));
      type.push_back(uniform(rng, 0, 1));
    }
  }
  const bool typed = coin(rng, 0.6);
  std::vector<bool> table(edges.size() * 4);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = coin(rng);

  std::vector<StructureEdge> sedges;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t y1 : members(ext[edges[e].from])) {
      for (std::size_t y2 : members(ext[edges[e].to])) {
        const bool c = typed ? table[e * 4 + type[y1] * 2 + type[y2]] : coin(rng);
        sedges.push_back({y1, y2, c});
      }
    }
  }
  return GraphDatabase::checked(Schema(labels, edges), Structure(slabels, sedges), ext);
}

// A random instance: connected domain, nonempty random subsets of Ext.
inline Instance random_instance(Rng& rng, const GraphDatabase& db, VertexSet within_image = ~VertexSet{0}) {
  const std::size_t names = db.schema().vertex_count();
  while (true) {
    VertexSet dom = 0;
    for (std::size_t x = 0; x < names; ++x) {
      if (coin(rng)) dom |= bit(x);
    }
    if (!db.schema().induces_connected(dom)) continue;
    std::vector<VertexSet> images(names, 0);
    bool ok = true;
    for (std::size_t x : members(dom)) {
      const VertexSet avail = db.ext(x) & within_image;
      if (avail == 0) {
        ok = false;
        break;
      }
      VertexSet img = 0;
      while (img == 0) {
        for (std::size_t y : members(avail)) {
          if (coin(rng, 0.6)) img |= bit(y);
        }
      }
      images[x] = img;
    }
    if (ok) return make_instance(db, images);
  }
}

// I = {Ext} or {Ext} plus one or two random instances.
inline std::vector<Instance> random_instance_list(Rng& rng, const GraphDatabase& db) {
  std::vector<Instance> out{ext_instance(db)};
  const std::size_t extra = coin(rng, 0.6) ? 0 : uniform(rng, 1, 2);
  for (std::size_t i = 0; i < extra; ++i) out.push_back(random_instance(rng, db));
  return out;
}

// Candidates: random instances (mostly inside Im(I)), closure members and
// unions of P^BI classes over a random connected domain.
inline std::vector<Instance> random_candidates(Rng& rng, const InstanceSet& is, const std::vector<Instance>& closure,
                                               const Partition& pbi, std::size_t count) {
  const auto& db = is.db();
  std::vector<Instance> out;
  while (out.size() < count) {
    switch (uniform(rng, 0, 3)) {
      case 0: out.push_back(random_instance(rng, db, is.image())); break;
      case 3: out.push_back(random_instance(rng, db)); break;
      case 1: out.push_back(closure[uniform(rng, 0, closure.size() - 1)]); break;
      default: {
        std::vector<VertexSet> images(db.schema().vertex_count(), 0);
        for (const auto& c : pbi.classes()) {
          if (coin(rng)) images[db.name_of(static_cast<std::size_t>(c.front()))] |= to_mask(c);
        }
        Instance f(images);
        if (f.domain() != 0 && db.schema().induces_connected(f.domain())) out.push_back(f);
      }
    }
  }
  return out;
}

}  // namespace gen
