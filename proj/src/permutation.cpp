#include "expresso/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "expresso/error.hpp"
#include "expresso/partition.hpp"

namespace expresso {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (Element e : images_) {
    if (e < 1 || static_cast<std::size_t>(e) > images_.size() || hit[static_cast<std::size_t>(e)]) {
      throw Error(ErrorCode::kInvalidPermutation, "image sequence is not a bijection on 1..n");
    }
    hit[static_cast<std::size_t>(e)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> img(degree);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Element>>& cycles) {
  std::vector<Element> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(degree + 1, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Element from = cyc[i];
      if (from < 1 || static_cast<std::size_t>(from) > degree || used[static_cast<std::size_t>(from)]) {
        throw Error(ErrorCode::kInvalidPermutation, "cycles are not disjoint within 1..n");
      }
      used[static_cast<std::size_t>(from)] = true;
      img[static_cast<std::size_t>(from - 1)] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Element>(i + 1)) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "composing permutations of degree " +
                                                std::to_string(degree()) + " and " +
                                                std::to_string(rhs.degree()));
  }
  std::vector<Element> img(degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = (*this)(rhs.images_[i]);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Element> img(degree());
  for (std::size_t i = 0; i < img.size(); ++i) {
    img[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Element>(i + 1);
  }
  return Permutation(std::move(img));
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> seen(degree() + 1, false);
  for (Element start = 1; static_cast<std::size_t>(start) <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += '(';
    Element x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x);
      seen[static_cast<std::size_t>(x)] = true;
      x = (*this)(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (Element e : p.images()) h = h * 31u + static_cast<std::size_t>(e);
  return h;
}

// ---------------------------------------------------------------------------

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& p : elements_) {
    if (p.degree() != degree_) throw Error(ErrorCode::kNotAGroup, "element of wrong degree");
  }
  if (elements_.empty() || !elements_.front().is_identity()) {
    throw Error(ErrorCode::kNotAGroup, "identity missing");
  }
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!contains(a * b)) throw Error(ErrorCode::kNotAGroup, "not closed under composition");
    }
  }
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(Trusted{}, degree, {Permutation::identity(degree)});
}

PermutationGroup PermutationGroup::symmetric(std::size_t degree) {
  std::vector<Element> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermutationGroup(Trusted{}, degree, std::move(all));
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
  return degree_ == g.degree_ &&
         std::includes(g.elements_.begin(), g.elements_.end(), elements_.begin(), elements_.end());
}

// ---------------------------------------------------------------------------

bool is_compatible(const Permutation& psi, const Relation& r) {
  if (static_cast<std::size_t>(r.max_element()) > psi.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "relation mentions " +
                                                std::to_string(r.max_element()) +
                                                " beyond permutation degree " +
                                                std::to_string(psi.degree()));
  }
  Tuple image(r.arity());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto t = r.tuple(i);
    for (std::size_t c = 0; c < t.size(); ++c) image[c] = psi(t[c]);
    if (!r.contains(image)) return false;
  }
  return true;
}

Relation cogroup_relation(const PermutationGroup& g) {
  std::vector<Tuple> rows;
  rows.reserve(g.order());
  for (const auto& p : g.elements()) rows.push_back(p.images());
  return Relation(g.degree(), std::move(rows));
}

Relation cgr(const RelationalDatabase& db) { return cogroup_relation(aut(db)); }

PermutationGroup group_closure(std::size_t degree, const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                  " in a group of degree " + std::to_string(degree));
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  // In a finite group the positive powers of each generator reach its
  // inverse, so closing under right multiplication by generators suffices.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = queue[i] * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  return PermutationGroup(PermutationGroup::Trusted{}, degree, std::move(queue));
}

Partition orbits(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& p : g.elements()) {
    for (Element x = 1; static_cast<std::size_t>(x) <= n; ++x) {
      const int a = find(x);
      const int b = find(p(x));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> classes(n + 1);
  for (Element x = 1; static_cast<std::size_t>(x) <= n; ++x) {
    classes[static_cast<std::size_t>(find(x))].push_back(x);
  }
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  return Partition(std::move(classes));
}

Partition cycles(const Permutation& psi) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(psi.degree() + 1, false);
  for (Element start = 1; static_cast<std::size_t>(start) <= psi.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (Element x = start; !seen[static_cast<std::size_t>(x)]; x = psi(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
    }
    classes.push_back(std::move(cyc));
  }
  return Partition(std::move(classes));
}

PermutationGroup stabilizer(const PermutationGroup& g, Element x) {
  if (x < 1 || static_cast<std::size_t>(x) > g.degree()) {
    throw Error(ErrorCode::kElementOutOfRange,
                std::to_string(x) + " outside 1.." + std::to_string(g.degree()));
  }
  std::vector<Permutation> fixing;
  for (const auto& p : g.elements()) {
    if (p(x) == x) fixing.push_back(p);
  }
  return PermutationGroup(PermutationGroup::Trusted{}, g.degree(), std::move(fixing));
}

std::size_t index(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g)) throw Error(ErrorCode::kNotASubgroup, "H is not contained in G");
  if (g.order() % h.order() != 0) {
    throw Error(ErrorCode::kInternal, "|H| = " + std::to_string(h.order()) +
                                          " does not divide |G| = " + std::to_string(g.order()));
  }
  return g.order() / h.order();
}

}  // namespace expresso
