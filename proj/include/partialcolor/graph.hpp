#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace partialcolor {

// Structured vertex labels.
//
// CliqueCoord (a, i) names vertex a of clique column i in a path of cliques.
// GadgetCoord names gadget vertex j of the gadget replacing the edge between
// the clique coordinates (ua, ui) and (va, vi); the (ua, ui) side is the one
// adjacent to gadget vertices 1..k-1.
struct PlainId {
  std::int64_t index = 0;
  auto operator<=>(const PlainId&) const = default;
};

struct CliqueCoord {
  int a = 1;
  int i = 1;
  auto operator<=>(const CliqueCoord&) const = default;
};

struct GadgetCoord {
  int ua = 1;
  int ui = 1;
  int va = 1;
  int vi = 1;
  int j = 1;
  auto operator<=>(const GadgetCoord&) const = default;
};

using StructuredId = std::variant<PlainId, CliqueCoord, GadgetCoord>;

inline std::string to_string(const StructuredId& id) {
  if (const auto* p = std::get_if<PlainId>(&id)) {
    return std::to_string(p->index);
  }
  if (const auto* c = std::get_if<CliqueCoord>(&id)) {
    return "(" + std::to_string(c->a) + "," + std::to_string(c->i) + ")";
  }
  const auto& g = std::get<GadgetCoord>(id);
  return "((" + std::to_string(g.ua) + "," + std::to_string(g.ui) + "),(" +
         std::to_string(g.va) + "," + std::to_string(g.vi) + ")," +
         std::to_string(g.j) + ")";
}

// Immutable undirected simple graph. Vertices are dense handles
// 0..vertex_count()-1; adjacency lists are kept sorted ascending so every
// traversal is deterministic.
class Graph {
 public:
  Graph() = default;

  static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list,
                     std::vector<StructuredId> labels = {}) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edge_list.size());
    for (const auto& [u, v] : edge_list) {
      if (u == v) {
        throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
      }
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("endpoint out of range: (" +
                                    std::to_string(u) + "," + std::to_string(v) +
                                    ") with n=" + std::to_string(n));
      }
      norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    g.edges_ = std::move(norm);
    for (const auto& [u, v] : g.edges_) {
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (!labels.empty()) {
      if (static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("label vector size must equal vertex count");
      }
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("vertex labels must be injective");
      }
      g.labels_ = std::move(labels);
    }
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  bool has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool has_labels() const { return !labels_.empty(); }

  const StructuredId& label(int v) const {
    check_vertex(v);
    if (!has_labels()) throw std::logic_error("graph carries no labels");
    return labels_[static_cast<std::size_t>(v)];
  }

  const std::vector<StructuredId>& labels() const { return labels_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range, n=" + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<StructuredId> labels_;
};

// Maximum degree; 0 for edgeless graphs.
inline int delta_max(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// Max over edges of the min endpoint degree; 0 for edgeless graphs by
// convention. This is the threshold at which a partial coloring collapses to
// a proper coloring.
inline int delta_edge(const Graph& g) {
  int best = 0;
  for (const auto& [u, v] : g.edges()) {
    best = std::max(best, std::min(g.degree(u), g.degree(v)));
  }
  return best;
}

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> order;  // min-degree peeling order
};

// Degeneracy by iterative minimum-degree peeling, ties broken by smallest
// vertex handle.
inline DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  DegeneracyResult res;
  res.order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || deg[static_cast<std::size_t>(v)] <
                          deg[static_cast<std::size_t>(best)]) {
        best = v;
      }
    }
    res.degeneracy = std::max(res.degeneracy, deg[static_cast<std::size_t>(best)]);
    removed[static_cast<std::size_t>(best)] = true;
    res.order.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    }
  }
  return res;
}

// BFS distances from a source; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::vector<int> frontier{source};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int u : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // vertices[new handle] = original handle
};

// Induced subgraph on all vertices within distance t of v, labels retained.
// t = 0 yields the single vertex v with no edges.
inline InducedSubgraph radius_neighborhood(const Graph& g, int v, int t) {
  if (t < 0) throw std::invalid_argument("radius must be non-negative");
  const auto dist = bfs_distances(g, v);
  InducedSubgraph out;
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (dist[static_cast<std::size_t>(u)] >= 0 &&
        dist[static_cast<std::size_t>(u)] <= t) {
      index[static_cast<std::size_t>(u)] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(u);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    const int ia = index[static_cast<std::size_t>(a)];
    const int ib = index[static_cast<std::size_t>(b)];
    if (ia >= 0 && ib >= 0) edges.emplace_back(ia, ib);
  }
  std::vector<StructuredId> labels;
  if (g.has_labels()) {
    labels.reserve(out.vertices.size());
    for (int orig : out.vertices) labels.push_back(g.label(orig));
  }
  out.graph = Graph::build(static_cast<int>(out.vertices.size()), edges,
                           std::move(labels));
  return out;
}

}  // namespace partialcolor
