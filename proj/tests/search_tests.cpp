#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "partialcolor/search.hpp"

using namespace partialcolor;

namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

}  // namespace

TEST_CASE("has_clique basics") {
  const Graph k4 = complete_graph(4);
  CHECK(has_clique(k4, 3));
  CHECK(has_clique(k4, 4));
  CHECK_FALSE(has_clique(k4, 5));
  CHECK_FALSE(has_clique(cycle_graph(5), 3));
  // K4 minus an edge has triangles but no K4.
  const Graph k4e = Graph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(has_clique(k4e, 3));
  CHECK_FALSE(has_clique(k4e, 4));
}

TEST_CASE("query validation") {
  ObstructionQuery q;
  q.k = 2;
  CHECK_THROWS_AS(search_obstructions(q), std::invalid_argument);
  q.k = 3;
  q.max_n = 11;
  CHECK_THROWS_AS(search_obstructions(q), std::invalid_argument);
}

TEST_CASE("with the clique filter off the smallest hit is the complete graph") {
  ObstructionQuery q;
  q.k = 3;
  q.max_n = 4;
  q.require_no_bigger_clique = false;
  const auto res = search_obstructions(q);
  REQUIRE(res.found.size() == 1);
  CHECK(res.smallest_n == 4);
  CHECK(res.found[0].graph.edge_count() == 6);
  CHECK(res.found[0].delta_edge_value == 3);
  CHECK(res.found[0].delta_max_value == 3);
  CHECK(res.candidates_checked > 0);
  CHECK(res.budget_exhausted == 0);
}

TEST_CASE("the clique filter removes the n=4 hit") {
  ObstructionQuery q;
  q.k = 3;
  q.max_n = 4;
  const auto res = search_obstructions(q);
  CHECK(res.found.empty());
  CHECK(res.smallest_n == 0);
}

TEST_CASE("clique-free hits appear at n=6 and are certified by full enumeration") {
  ObstructionQuery q;
  q.k = 3;
  q.max_n = 6;
  q.max_results = 1;
  const auto res = search_obstructions(q);
  REQUIRE(res.found.size() == 1);
  CHECK(res.smallest_n == 6);
  const Graph& g = res.found[0].graph;
  CHECK(delta_edge(g) == 3);
  CHECK_FALSE(has_clique(g, 4));
  // Independent certification: no assignment from 3^6 works.
  bool any = false;
  test_helpers::for_each_coloring(g.vertex_count(), 3,
                                  [&](const std::vector<int>& colors) {
                                    if (any) return;
                                    Coloring col{3, colors};
                                    any = verify_partial(g, col, PartialSpec{3, 3}).empty();
                                  });
  CHECK_FALSE(any);
}
