#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partialcolor/exact.hpp"
#include "partialcolor/graph.hpp"

namespace partialcolor {

// True iff the graph contains a clique on `size` vertices.
inline bool has_clique(const Graph& g, int size) {
  const int n = g.vertex_count();
  if (size <= 1) return size == 1 ? n >= 1 : true;
  if (size > n) return false;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  std::vector<int> pick;
  // DFS over vertex subsets, extending only by common neighbors.
  std::function<bool(int, std::uint64_t)> extend = [&](int first,
                                                       std::uint64_t common) {
    if (static_cast<int>(pick.size()) == size) return true;
    for (int v = first; v < n; ++v) {
      if (!(common >> v & 1) && !pick.empty()) continue;
      if (pick.empty() || (common >> v & 1)) {
        pick.push_back(v);
        if (extend(v + 1, pick.size() == 1 ? adj[static_cast<std::size_t>(v)]
                                           : (common & adj[static_cast<std::size_t>(v)]))) {
          return true;
        }
        pick.pop_back();
      }
    }
    return false;
  };
  return extend(0, ~std::uint64_t{0});
}

struct ObstructionQuery {
  int k = 3;
  int max_n = 7;
  bool require_no_bigger_clique = true;   // exclude (k+1)-cliques
  std::optional<int> require_delta_max;   // filter on maximum degree
  std::size_t max_results = 8;
  std::uint64_t budget = 10'000'000;      // decide_exact node budget per candidate
};

struct Obstruction {
  Graph graph;
  int delta_edge_value = 0;
  int delta_max_value = 0;
};

struct ObstructionSearchResult {
  std::vector<Obstruction> found;
  std::uint64_t candidates_checked = 0;
  std::uint64_t budget_exhausted = 0;  // candidates the oracle could not decide
  int smallest_n = 0;                  // vertex count of the hits, 0 if none
};

// Enumerates connected graphs on n = 2..max_n vertices by edge-set
// enumeration (no isomorphism reduction, so hits appear with all labelings)
// and keeps those with delta_edge = k that admit no k-partial k-coloring.
// Stops at the smallest n that produces hits.
inline ObstructionSearchResult search_obstructions(const ObstructionQuery& q) {
  if (q.k < 3) throw std::invalid_argument("obstruction search requires k >= 3");
  if (q.max_n > 10) throw std::invalid_argument("edge-set enumeration beyond n=10 is not supported");
  ObstructionSearchResult res;
  for (int n = 2; n <= q.max_n && res.found.empty(); ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const int np = static_cast<int>(pairs.size());
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
      ++res.candidates_checked;
      std::fill(deg.begin(), deg.end(), 0);
      for (int p = 0; p < np; ++p) {
        if (mask >> p & 1) {
          ++deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)];
          ++deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)];
        }
      }
      int de = 0, dm = 0;
      for (int p = 0; p < np; ++p) {
        if (mask >> p & 1) {
          de = std::max(de, std::min(deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)],
                                     deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)]));
        }
      }
      for (int v = 0; v < n; ++v) dm = std::max(dm, deg[static_cast<std::size_t>(v)]);
      if (de != q.k) continue;
      if (q.require_delta_max && dm != *q.require_delta_max) continue;

      // connectivity by union-find
      for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
      auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
          parent[static_cast<std::size_t>(v)] =
              parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
          v = parent[static_cast<std::size_t>(v)];
        }
        return v;
      };
      int components = n;
      for (int p = 0; p < np; ++p) {
        if (mask >> p & 1) {
          const int a = find(pairs[static_cast<std::size_t>(p)].first);
          const int b = find(pairs[static_cast<std::size_t>(p)].second);
          if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
          }
        }
      }
      if (components != 1) continue;

      std::vector<std::pair<int, int>> edges;
      for (int p = 0; p < np; ++p) {
        if (mask >> p & 1) edges.push_back(pairs[static_cast<std::size_t>(p)]);
      }
      Graph g = Graph::build(n, edges);
      if (q.require_no_bigger_clique && has_clique(g, q.k + 1)) continue;

      const auto decision = decide_exact(g, PartialSpec{q.k, q.k}, q.budget);
      if (decision.status == DecideStatus::BudgetExceeded) {
        ++res.budget_exhausted;
        continue;
      }
      if (decision.status == DecideStatus::Unsatisfiable) {
        res.found.push_back({std::move(g), de, dm});
        res.smallest_n = n;
        if (res.found.size() >= q.max_results) break;
      }
    }
  }
  return res;
}

}  // namespace partialcolor
