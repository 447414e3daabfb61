#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partialcolor/graph.hpp"

namespace partialcolor {

// Bijection on {1..k}, stored as a 1-based image array.
struct Permutation {
  int k = 0;
  std::vector<int> image;  // image[a-1] = value of a

  static Permutation identity(int k) {
    Permutation p{k, std::vector<int>(static_cast<std::size_t>(k))};
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
  }

  // a -> (a mod k) + 1
  static Permutation cyclic_shift(int k) {
    Permutation p{k, std::vector<int>(static_cast<std::size_t>(k))};
    for (int a = 1; a <= k; ++a) p.image[static_cast<std::size_t>(a - 1)] = a % k + 1;
    return p;
  }

  static Permutation from_image(std::vector<int> image) {
    Permutation p{static_cast<int>(image.size()), std::move(image)};
    p.validate();
    return p;
  }

  void validate() const {
    if (k < 1 || static_cast<int>(image.size()) != k) {
      throw std::invalid_argument("permutation image must list 1..k");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int x : image) {
      if (x < 1 || x > k || seen[static_cast<std::size_t>(x - 1)]) {
        throw std::invalid_argument("permutation image must be a bijection on 1..k");
      }
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
  }

  int apply(int a) const {
    if (a < 1 || a > k) throw std::out_of_range("permutation argument out of range");
    return image[static_cast<std::size_t>(a - 1)];
  }

  Permutation inverse() const {
    Permutation inv{k, std::vector<int>(static_cast<std::size_t>(k))};
    for (int a = 1; a <= k; ++a) inv.image[static_cast<std::size_t>(apply(a) - 1)] = a;
    return inv;
  }

  bool is_identity() const {
    for (int a = 1; a <= k; ++a) {
      if (apply(a) != a) return false;
    }
    return true;
  }

  bool operator==(const Permutation&) const = default;
};

// l columns of k-cliques joined by anti-matchings: consecutive columns carry
// the complete bipartite graph minus the perfect matching given by the
// column's permutation.
struct PathOfCliquesSpec {
  int k = 3;
  int l = 2;
  std::vector<Permutation> perms;  // l-1 permutations on [k]

  static PathOfCliquesSpec all_identity(int k, int l) {
    PathOfCliquesSpec s{k, l, {}};
    for (int i = 0; i + 1 < l; ++i) s.perms.push_back(Permutation::identity(k));
    return s;
  }

  void validate() const {
    if (k < 3) throw std::invalid_argument("path of cliques requires k >= 3");
    if (l < 2) throw std::invalid_argument("path of cliques requires l >= 2");
    if (static_cast<int>(perms.size()) != l - 1) {
      throw std::invalid_argument("need exactly l-1 permutations");
    }
    for (const auto& p : perms) {
      if (p.k != k) throw std::invalid_argument("permutation arity must equal k");
      p.validate();
    }
  }
};

// Handle of clique-coordinate vertex (a, i), column-major.
inline int poc_vertex(int k, int a, int i) { return (i - 1) * k + (a - 1); }

inline Graph path_of_cliques(const PathOfCliquesSpec& spec) {
  spec.validate();
  const int k = spec.k;
  const int l = spec.l;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= l; ++i) {
    for (int a = 1; a <= k; ++a) {
      for (int b = a + 1; b <= k; ++b) {
        edges.emplace_back(poc_vertex(k, a, i), poc_vertex(k, b, i));
      }
    }
  }
  for (int i = 1; i < l; ++i) {
    const auto& tau = spec.perms[static_cast<std::size_t>(i - 1)];
    for (int a = 1; a <= k; ++a) {
      for (int b = 1; b <= k; ++b) {
        if (b != tau.apply(a)) {
          edges.emplace_back(poc_vertex(k, a, i), poc_vertex(k, b, i + 1));
        }
      }
    }
  }
  std::vector<StructuredId> labels(static_cast<std::size_t>(k * l));
  for (int i = 1; i <= l; ++i) {
    for (int a = 1; a <= k; ++a) {
      labels[static_cast<std::size_t>(poc_vertex(k, a, i))] = CliqueCoord{a, i};
    }
  }
  return Graph::build(k * l, edges, std::move(labels));
}

// Composite of the column permutations applied first-to-last: a proper
// coloring propagates the color of (i, 1) to (composite(i), l).
inline Permutation propagation_composite(const PathOfCliquesSpec& spec) {
  spec.validate();
  Permutation comp = Permutation::identity(spec.k);
  for (int a = 1; a <= spec.k; ++a) {
    int x = a;
    for (const auto& tau : spec.perms) x = tau.apply(x);
    comp.image[static_cast<std::size_t>(a - 1)] = x;
  }
  return comp;
}

// Which endpoint of an undirected edge plays the u role in its gadget.
enum class GadgetOrientation { LowerHandleFirst, HigherHandleFirst };

struct ReductionMap {
  int k = 0;
  int base_vertex_count = 0;
  std::vector<std::pair<int, int>> oriented_edges;  // (u, v) per original edge

  // Handle of gadget vertex (u, v, j) for the edge at edge_index, j in [k].
  int gadget_vertex(int edge_index, int j) const {
    return base_vertex_count + edge_index * k + (j - 1);
  }
};

struct GadgetTransformResult {
  Graph graph;
  ReductionMap map;
};

// Replaces every edge {u,v} by a k-clique of fresh vertices, with u adjacent
// to the first k-1 of them and v to the k-th; the original edge is removed.
// Every gadget vertex ends with degree exactly k and the u-v distance inside
// one gadget is 3. If the input carries clique-coordinate labels, gadget
// vertices are labeled with the corresponding gadget coordinates.
inline GadgetTransformResult edge_gadget_transform(
    const Graph& g, int k,
    GadgetOrientation orientation = GadgetOrientation::LowerHandleFirst) {
  if (k < 3) throw std::invalid_argument("edge gadget requires k >= 3");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  ReductionMap map;
  map.k = k;
  map.base_vertex_count = n;
  map.oriented_edges.reserve(static_cast<std::size_t>(m));
  for (const auto& [a, b] : g.edges()) {
    if (orientation == GadgetOrientation::LowerHandleFirst) {
      map.oriented_edges.emplace_back(a, b);
    } else {
      map.oriented_edges.emplace_back(b, a);
    }
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) *
                static_cast<std::size_t>(k * (k - 1) / 2 + k));
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = map.oriented_edges[static_cast<std::size_t>(e)];
    for (int j = 1; j <= k; ++j) {
      for (int j2 = j + 1; j2 <= k; ++j2) {
        edges.emplace_back(map.gadget_vertex(e, j), map.gadget_vertex(e, j2));
      }
    }
    for (int j = 1; j < k; ++j) edges.emplace_back(u, map.gadget_vertex(e, j));
    edges.emplace_back(v, map.gadget_vertex(e, k));
  }

  std::vector<StructuredId> labels;
  const bool clique_labeled =
      g.has_labels() &&
      std::all_of(g.labels().begin(), g.labels().end(), [](const StructuredId& id) {
        return std::holds_alternative<CliqueCoord>(id);
      });
  if (clique_labeled) {
    labels.resize(static_cast<std::size_t>(n + k * m));
    for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = g.label(v);
    for (int e = 0; e < m; ++e) {
      const auto [u, v] = map.oriented_edges[static_cast<std::size_t>(e)];
      const auto cu = std::get<CliqueCoord>(g.label(u));
      const auto cv = std::get<CliqueCoord>(g.label(v));
      for (int j = 1; j <= k; ++j) {
        labels[static_cast<std::size_t>(map.gadget_vertex(e, j))] =
            GadgetCoord{cu.a, cu.i, cv.a, cv.i, j};
      }
    }
  }

  return {Graph::build(n + k * m, edges, std::move(labels)), std::move(map)};
}

// Injective integer encoding of structured ids, identical for identical
// labels across graphs. Clique coordinates rank first:
//   enc((a,i))                    = (i-1)*k + a
//   enc(((ua,ui),(va,vi),j))      = k*l + mixed-radix rank of (ui,ua,vi,va,j)
// with k and l taken as the maximal coordinates present. The range is
// polynomial in the vertex count, so ids fit in O(log n) bits.
inline std::vector<std::uint64_t> assign_ids(const Graph& g) {
  if (g.vertex_count() > 0 && !g.has_labels()) {
    throw std::invalid_argument("assign_ids requires a fully labeled graph");
  }
  std::uint64_t k = 1, l = 1, plain_limit = 0;
  for (const auto& id : g.labels()) {
    if (const auto* c = std::get_if<CliqueCoord>(&id)) {
      k = std::max(k, static_cast<std::uint64_t>(c->a));
      l = std::max(l, static_cast<std::uint64_t>(c->i));
    } else if (const auto* gc = std::get_if<GadgetCoord>(&id)) {
      k = std::max({k, static_cast<std::uint64_t>(gc->ua),
                    static_cast<std::uint64_t>(gc->va),
                    static_cast<std::uint64_t>(gc->j)});
      l = std::max({l, static_cast<std::uint64_t>(gc->ui),
                    static_cast<std::uint64_t>(gc->vi)});
    } else {
      const auto& p = std::get<PlainId>(id);
      if (p.index < 0) throw std::invalid_argument("plain label index must be non-negative");
      plain_limit = std::max(plain_limit, static_cast<std::uint64_t>(p.index) + 1);
    }
  }
  std::vector<std::uint64_t> ids(static_cast<std::size_t>(g.vertex_count()));
  const std::uint64_t clique_base = plain_limit;
  const std::uint64_t gadget_base = clique_base + k * l;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& id = g.label(v);
    std::uint64_t enc;
    if (const auto* p = std::get_if<PlainId>(&id)) {
      enc = static_cast<std::uint64_t>(p->index) + 1;
    } else if (const auto* c = std::get_if<CliqueCoord>(&id)) {
      enc = clique_base + static_cast<std::uint64_t>(c->i - 1) * k +
            static_cast<std::uint64_t>(c->a);
    } else {
      const auto& gc = std::get<GadgetCoord>(id);
      std::uint64_t rank = static_cast<std::uint64_t>(gc.ui - 1);
      rank = rank * k + static_cast<std::uint64_t>(gc.ua - 1);
      rank = rank * l + static_cast<std::uint64_t>(gc.vi - 1);
      rank = rank * k + static_cast<std::uint64_t>(gc.va - 1);
      rank = rank * k + static_cast<std::uint64_t>(gc.j - 1);
      enc = gadget_base + rank + 1;
    }
    ids[static_cast<std::size_t>(v)] = enc;
  }
  return ids;
}

struct IndistPair {
  Graph g1;
  Graph g2;
  std::vector<int> left_column;   // handles of (i, 1), i = 1..k
  std::vector<int> right_column;  // handles of (i, l), i = 1..k
};

// The two gadget-transformed paths of cliques that agree on each half but
// differ in the middle anti-matching. Base vertices keep their handles, so
// (a, i) sits at the same handle in both graphs, and identical structured ids
// encode to identical integers.
inline IndistPair indist_pair(int k, int l, const Permutation& middle_perm) {
  if (k < 3) throw std::invalid_argument("indistinguishable pair requires k >= 3");
  if (l < 4 || l % 2 != 0) {
    throw std::invalid_argument("indistinguishable pair requires even l >= 4");
  }
  if (middle_perm.k != k) throw std::invalid_argument("middle permutation arity must equal k");
  middle_perm.validate();
  if (middle_perm.is_identity()) {
    throw std::invalid_argument("middle permutation must not be the identity");
  }
  auto spec1 = PathOfCliquesSpec::all_identity(k, l);
  auto spec2 = spec1;
  spec2.perms[static_cast<std::size_t>(l / 2 - 1)] = middle_perm;

  IndistPair pair;
  pair.g1 = edge_gadget_transform(path_of_cliques(spec1), k).graph;
  pair.g2 = edge_gadget_transform(path_of_cliques(spec2), k).graph;
  for (int a = 1; a <= k; ++a) {
    pair.left_column.push_back(poc_vertex(k, a, 1));
    pair.right_column.push_back(poc_vertex(k, a, l));
  }
  return pair;
}

}  // namespace partialcolor
