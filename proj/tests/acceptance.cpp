// Acceptance suite: end-to-end certification runs, one verdict line each.
// Exit code is the number of failed checks.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "partialcolor/exact.hpp"
#include "partialcolor/gadgets.hpp"
#include "partialcolor/graph.hpp"
#include "partialcolor/local_sim.hpp"
#include "partialcolor/search.hpp"

using namespace partialcolor;
using test_helpers::for_each_coloring;
using test_helpers::graph_from_mask;
using test_helpers::is_connected;
using test_helpers::mask_count;
using test_helpers::random_graph;

namespace {

int failures = 0;

class Check {
 public:
  Check(int index, std::string name)
      : index_(index), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    ok_ = false;
    if (detail_.empty()) detail_ = why;
  }

  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }

  ~Check() {
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    std::printf("[%s] %d. %s (%.1fs)%s%s\n", ok_ ? "PASS" : "FAIL", index_,
                name_.c_str(), secs, detail_.empty() ? "" : " -- ",
                detail_.c_str());
    std::fflush(stdout);
    if (!ok_) ++failures;
  }

 private:
  int index_;
  std::string name_;
  bool ok_ = true;
  std::string detail_;
  std::chrono::steady_clock::time_point start_;
};

void check_greedy_soundness() {
  Check c(1, "greedy output valid on 10000 random graphs (n <= 200, k <= 8)");
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> nd(1, 200);
  std::uniform_int_distribution<int> kd(1, 8);
  std::uniform_real_distribution<double> pd(0.0, 0.35);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = nd(rng);
    const int k = kd(rng);
    const Graph g = random_graph(rng, n, pd(rng));
    const auto col = greedy_partial(g, k);
    if (!verify_partial(g, col, PartialSpec{k, k + 1}).empty()) {
      c.fail("invalid coloring at trial " + std::to_string(trial));
      return;
    }
  }
}

void check_threshold_collapse() {
  Check c(2, "at k = edge-degree bound, every valid coloring is proper "
             "(all graphs, n <= 6)");
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const int k = delta_edge(g);
      for (int palette : {std::max(k, 1), k + 1}) {
        for (const auto& col : enumerate_valid(g, PartialSpec{k, palette})) {
          if (!verify_proper(g, col).empty()) {
            c.fail("non-proper valid coloring, n=" + std::to_string(n) +
                   " mask=" + std::to_string(mask));
            return;
          }
        }
      }
    }
  }
}

void check_single_gadget() {
  Check c(3, "single-edge gadget (k=3): full 3^5 sweep separates the endpoints");
  const Graph base = Graph::build(2, {{0, 1}});
  const Graph g = edge_gadget_transform(base, 3).graph;
  c.expect(g.vertex_count() == 5, "expected 5 vertices");
  std::uint64_t valid = 0, proper = 0;
  bool separated = true;
  for_each_coloring(g.vertex_count(), 3, [&](const std::vector<int>& colors) {
    const Coloring col{3, colors};
    if (verify_partial(g, col, PartialSpec{3, 3}).empty()) {
      ++valid;
      separated = separated && colors[0] != colors[1];
    }
    if (verify_proper(g, col).empty()) ++proper;
  });
  c.expect(valid > 0, "no valid coloring found");
  c.expect(separated, "a valid coloring leaves the endpoints monochromatic");
  c.expect(valid == proper, "valid and proper coloring counts differ");
}

void check_reduction_equivalence() {
  Check c(4, "gadget reduction preserves k-colorability (connected n <= 5, "
             "k in {3,4})");
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      for (int k : {3, 4}) {
        const bool base_colorable =
            decide_proper(g, k).status == DecideStatus::Satisfiable;
        const Graph t = edge_gadget_transform(g, k).graph;
        const auto res = decide_exact(t, PartialSpec{k, k});
        if (res.status == DecideStatus::BudgetExceeded) {
          c.fail("budget exceeded, n=" + std::to_string(n));
          return;
        }
        const bool transformed_colorable = res.status == DecideStatus::Satisfiable;
        if (base_colorable != transformed_colorable) {
          c.fail("mismatch at n=" + std::to_string(n) +
                 " mask=" + std::to_string(mask) + " k=" + std::to_string(k));
          return;
        }
        if (res.coloring &&
            !verify_partial(t, *res.coloring, PartialSpec{k, k}).empty()) {
          c.fail("witness coloring invalid");
          return;
        }
      }
    }
  }
}

void check_propagation() {
  Check c(5, "clique-path colorings exist and propagate through the "
             "permutation composite");
  std::mt19937 rng(424242);
  auto random_perm = [&](int k) {
    std::vector<int> image(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) image[static_cast<std::size_t>(a)] = a + 1;
    for (int a = k - 1; a > 0; --a) {
      std::swap(image[static_cast<std::size_t>(a)],
                image[static_cast<std::size_t>(rng() % (a + 1))]);
    }
    return Permutation::from_image(image);
  };
  auto propagates = [](const PathOfCliquesSpec& spec, const Coloring& col) {
    const auto comp = propagation_composite(spec);
    for (int a = 1; a <= spec.k; ++a) {
      const int left = col.colors[static_cast<std::size_t>(poc_vertex(spec.k, a, 1))];
      const int right = col.colors[static_cast<std::size_t>(
          poc_vertex(spec.k, comp.apply(a), spec.l))];
      if (left != right) return false;
    }
    return true;
  };

  const int k = 3;
  for (int l : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      PathOfCliquesSpec spec{k, l, {}};
      for (int i = 0; i + 1 < l; ++i) spec.perms.push_back(random_perm(k));
      const Graph g = path_of_cliques(spec);
      ProperColoringEnumerator e(g, k);
      std::uint64_t count = 0;
      while (auto col = e.next()) {
        ++count;
        if (!propagates(spec, *col)) {
          c.fail("propagation broken, l=" + std::to_string(l) +
                 " trial=" + std::to_string(trial));
          return;
        }
      }
      // Columns are k-cliques, so a proper k-coloring is a column-wise
      // permutation of colors; with the left column free there are exactly k!.
      if (count != 6) {
        c.fail("expected 6 proper colorings, got " + std::to_string(count));
        return;
      }
    }
  }

  // k = 4 spot check on a sample of colorings.
  for (int trial = 0; trial < 5; ++trial) {
    PathOfCliquesSpec spec{4, 3, {random_perm(4), random_perm(4)}};
    const Graph g = path_of_cliques(spec);
    ProperColoringEnumerator e(g, 4);
    int seen = 0;
    while (auto col = e.next()) {
      if (!propagates(spec, *col)) {
        c.fail("propagation broken at k=4");
        return;
      }
      if (++seen >= 10) break;
    }
    if (seen == 0) {
      c.fail("no proper 4-coloring found at k=4");
      return;
    }
  }
}

void check_view_agreement_and_demo() {
  Check c(6, "pair endpoints are indistinguishable in budget; every corpus "
             "algorithm fails");
  for (int k : {3, 4}) {
    for (int l : {4, 6, 8}) {
      const auto pair = indist_pair(k, l, Permutation::cyclic_shift(k));
      const int base_edges = l * k * (k - 1) / 2 + (l - 1) * k * (k - 1);
      const int expected_n = k * l + k * base_edges;
      if (pair.g1.vertex_count() != expected_n ||
          pair.g2.vertex_count() != expected_n) {
        c.fail("vertex count formula violated at k=" + std::to_string(k) +
               " l=" + std::to_string(l));
        return;
      }

      const auto net1 = make_network(pair.g1, k);
      const auto net2 = make_network(pair.g2, k);
      std::vector<std::uint64_t> ids;
      for (int v : pair.left_column) ids.push_back(net1.ids[static_cast<std::size_t>(v)]);
      for (int v : pair.right_column) ids.push_back(net1.ids[static_cast<std::size_t>(v)]);
      const auto report =
          indistinguishability_report(net1, net2, ids, 3 * (l / 2 - 1));
      if (!report.all_equal) {
        c.fail("views differ inside the safe radius, k=" + std::to_string(k) +
               " l=" + std::to_string(l));
        return;
      }

      const int budget = 3 * (l / 2 - 1) + 1;
      for (const auto& name : algorithm_names()) {
        const auto res = lower_bound_demo(k, l, make_algorithm(name, budget, k));
        if (!res.endpoint_agreement) {
          c.fail(name + " breaks endpoint agreement at k=" + std::to_string(k) +
                 " l=" + std::to_string(l));
          return;
        }
        if (res.g1_violations + res.g2_violations == 0) {
          c.fail(name + " produced valid colorings on both graphs at k=" +
                 std::to_string(k) + " l=" + std::to_string(l));
          return;
        }
      }
    }
  }
}

void check_degree_chain() {
  Check c(7, "degeneracy <= edge-degree bound <= max degree (exhaustive n <= 7 "
             "plus 1000 random)");
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const int kd = degeneracy(g).degeneracy;
      const int de = delta_edge(g);
      const int dm = delta_max(g);
      if (kd > de || de > dm) {
        c.fail("chain broken, n=" + std::to_string(n) +
               " mask=" + std::to_string(mask));
        return;
      }
    }
  }
  std::mt19937 rng(7777);
  std::uniform_int_distribution<int> nd(1, 60);
  std::uniform_real_distribution<double> pd(0.0, 0.8);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_graph(rng, nd(rng), pd(rng));
    const int kd = degeneracy(g).degeneracy;
    const int de = delta_edge(g);
    const int dm = delta_max(g);
    if (kd > de || de > dm) {
      c.fail("chain broken on random trial " + std::to_string(trial));
      return;
    }
  }
}

void check_obstruction() {
  Check c(8, "max-degree-4 hard instance found at n=7 and certified by full "
             "enumeration");
  ObstructionQuery q;
  q.k = 3;
  q.max_n = 7;
  q.require_delta_max = 4;
  q.max_results = 1;
  const auto res = search_obstructions(q);
  c.expect(res.budget_exhausted == 0, "search budget exhausted");
  if (res.found.empty()) {
    c.fail("no obstruction found");
    return;
  }
  const Graph& g = res.found[0].graph;
  c.expect(res.smallest_n == 7, "hit not at n=7");
  c.expect(delta_edge(g) == 3, "edge-degree bound is not 3");
  c.expect(delta_max(g) == 4, "max degree is not 4");
  c.expect(!has_clique(g, 4), "hit contains a 4-clique");
  // Independent certification: none of the 3^7 assignments is valid.
  bool any = false;
  for_each_coloring(g.vertex_count(), 3, [&](const std::vector<int>& colors) {
    if (any) return;
    any = verify_partial(g, Coloring{3, colors}, PartialSpec{3, 3}).empty();
  });
  c.expect(!any, "full enumeration found a valid coloring");
}

void check_large_pair() {
  Check c(9, "k=3, l=200 pair: id audit plus endpoint view agreement at "
             "radius 297");
  const int k = 3, l = 200;
  const auto pair = indist_pair(k, l, Permutation::cyclic_shift(k));
  const int base_edges = l * k * (k - 1) / 2 + (l - 1) * k * (k - 1);
  c.expect(pair.g1.vertex_count() == k * l + k * base_edges,
           "vertex count formula violated");

  const auto net1 = make_network(pair.g1, k);
  const auto net2 = make_network(pair.g2, k);
  std::set<std::uint64_t> uniq1(net1.ids.begin(), net1.ids.end());
  std::set<std::uint64_t> uniq2(net2.ids.begin(), net2.ids.end());
  c.expect(uniq1.size() == net1.ids.size(), "ids not injective in graph 1");
  c.expect(uniq2.size() == net2.ids.size(), "ids not injective in graph 2");

  std::vector<std::uint64_t> ids;
  for (int v : pair.left_column) ids.push_back(net1.ids[static_cast<std::size_t>(v)]);
  for (int v : pair.right_column) ids.push_back(net1.ids[static_cast<std::size_t>(v)]);
  const int safe = 3 * (l / 2 - 1);
  const auto report = indistinguishability_report(net1, net2, ids, safe);
  c.expect(report.all_equal, "views differ inside the safe radius");
  const auto beyond = indistinguishability_report(net1, net2, ids, safe + 1);
  c.expect(!beyond.all_equal, "views still equal past the safe radius");
}

}  // namespace

int main() {
  check_greedy_soundness();
  check_threshold_collapse();
  check_single_gadget();
  check_reduction_equivalence();
  check_propagation();
  check_view_agreement_and_demo();
  check_degree_chain();
  check_obstruction();
  check_large_pair();
  std::printf("%d of 9 checks failed\n", failures);
  return failures;
}
