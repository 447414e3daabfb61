#pragma once

// Shared test utilities: deterministic random graphs, exhaustive small-graph
// enumeration, and brute-force oracles kept independent of the library's
// search paths.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "partialcolor/coloring.hpp"
#include "partialcolor/graph.hpp"

namespace test_helpers {

using partialcolor::Coloring;
using partialcolor::Graph;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

// Graph for one edge-subset mask over the C(n,2) vertex pairs in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

inline std::uint64_t mask_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = partialcolor::bfs_distances(g, 0);
  for (int d : dist) {
    if (d < 0) return false;
  }
  return true;
}

// Floyd-Warshall distances, independent of the library's BFS.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (const auto& [u, v] : g.edges()) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const int via = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] +
                        d[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
        if (via < d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = via;
        }
      }
    }
  }
  return d;
}

// Calls fn with every assignment vector over {1..c}^n in lexicographic order.
template <typename Fn>
void for_each_coloring(int n, int c, Fn&& fn) {
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  while (true) {
    fn(colors);
    int pos = n - 1;
    while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == c) {
      colors[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++colors[static_cast<std::size_t>(pos)];
  }
}

// Brute-force count of proper c-colorings.
inline std::uint64_t count_proper_colorings(const Graph& g, int c) {
  std::uint64_t count = 0;
  for_each_coloring(g.vertex_count(), c, [&](const std::vector<int>& colors) {
    for (const auto& [u, v] : g.edges()) {
      if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return;
    }
    ++count;
  });
  return count;
}

}  // namespace test_helpers
