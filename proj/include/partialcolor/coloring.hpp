#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partialcolor/graph.hpp"

namespace partialcolor {

// Total color assignment over the palette {1..palette}.
struct Coloring {
  int palette = 1;
  std::vector<int> colors;  // colors[v] in {1..palette}
};

// A k-partial c-coloring requires every vertex v to have at least
// min(k, deg(v)) neighbors with a color different from its own.
struct PartialSpec {
  int k = 0;
  int c = 1;
};

struct Violation {
  int vertex = 0;
  int required = 0;
  int achieved = 0;
};

class PaletteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_coloring_shape(const Graph& g, const Coloring& col, int c) {
  if (static_cast<int>(col.colors.size()) != g.vertex_count()) {
    throw std::invalid_argument("coloring must cover every vertex");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int x = col.colors[static_cast<std::size_t>(v)];
    if (x < 1 || x > c) {
      throw PaletteError("vertex " + std::to_string(v) + " has color " +
                         std::to_string(x) + " outside palette {1.." +
                         std::to_string(c) + "}");
    }
  }
}

// Returns exactly the vertices whose differently-colored neighbor count falls
// short of min(k, deg(v)); empty means the coloring is a valid k-partial
// c-coloring. Colors outside {1..c} raise PaletteError instead of being
// reported as violations.
inline std::vector<Violation> verify_partial(const Graph& g, const Coloring& col,
                                             const PartialSpec& spec) {
  if (spec.k < 0 || spec.c < 1) throw std::invalid_argument("need k >= 0, c >= 1");
  check_coloring_shape(g, col, spec.c);
  std::vector<Violation> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int required = std::min(spec.k, g.degree(v));
    int achieved = 0;
    for (int u : g.neighbors(v)) {
      if (col.colors[static_cast<std::size_t>(u)] !=
          col.colors[static_cast<std::size_t>(v)]) {
        ++achieved;
      }
    }
    if (achieved < required) out.push_back({v, required, achieved});
  }
  return out;
}

// All monochromatic edges; empty means the coloring is proper.
inline std::vector<std::pair<int, int>> verify_proper(const Graph& g,
                                                      const Coloring& col) {
  check_coloring_shape(g, col, col.palette);
  std::vector<std::pair<int, int>> mono;
  for (const auto& [u, v] : g.edges()) {
    if (col.colors[static_cast<std::size_t>(u)] ==
        col.colors[static_cast<std::size_t>(v)]) {
      mono.emplace_back(u, v);
    }
  }
  return mono;
}

// Sequential greedy k-partial (k+1)-coloring. All vertices start with color 1;
// each processed vertex either already sees all k+1 colors in its neighborhood
// or is recolored to the smallest color absent from it. The result is always a
// valid k-partial (k+1)-coloring.
inline Coloring greedy_partial(const Graph& g, int k,
                               const std::optional<std::vector<int>>& order =
                                   std::nullopt) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.vertex_count();
  const int c = k + 1;
  std::vector<int> seq;
  if (order) {
    seq = *order;
    if (static_cast<int>(seq.size()) != n) {
      throw std::invalid_argument("processing order must list every vertex once");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : seq) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("processing order must be a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  } else {
    seq.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) seq[static_cast<std::size_t>(v)] = v;
  }

  Coloring col{c, std::vector<int>(static_cast<std::size_t>(n), 1)};
  std::vector<bool> present(static_cast<std::size_t>(c) + 1, false);
  for (int v : seq) {
    int distinct = 0;
    for (int u : g.neighbors(v)) {
      const int x = col.colors[static_cast<std::size_t>(u)];
      if (!present[static_cast<std::size_t>(x)]) {
        present[static_cast<std::size_t>(x)] = true;
        ++distinct;
      }
    }
    if (distinct < c) {
      for (int x = 1; x <= c; ++x) {
        if (!present[static_cast<std::size_t>(x)]) {
          col.colors[static_cast<std::size_t>(v)] = x;
          break;
        }
      }
    }
    for (int u : g.neighbors(v)) {
      present[static_cast<std::size_t>(col.colors[static_cast<std::size_t>(u)])] =
          false;
    }
  }
  return col;
}

}  // namespace partialcolor
