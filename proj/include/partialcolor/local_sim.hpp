#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partialcolor/coloring.hpp"
#include "partialcolor/gadgets.hpp"
#include "partialcolor/graph.hpp"

namespace partialcolor {

// A communication network: the topology plus per-vertex ids and opaque input
// strings. Ids are injective; inputs are total.
struct NetworkInstance {
  Graph graph;
  std::vector<std::uint64_t> ids;
  std::vector<std::string> inputs;

  int vertex_of(std::uint64_t id) const {
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (ids[static_cast<std::size_t>(v)] == id) return v;
    }
    return -1;
  }
};

// Fixed-layout node input: little-endian u32 fields (k, n, d) where the id
// space is {1..n^d}.
inline std::string encode_node_input(int k, int n, int d) {
  std::string s(12, '\0');
  auto put = [&](int off, std::uint32_t x) {
    for (int b = 0; b < 4; ++b) s[static_cast<std::size_t>(off + b)] =
        static_cast<char>((x >> (8 * b)) & 0xff);
  };
  put(0, static_cast<std::uint32_t>(k));
  put(4, static_cast<std::uint32_t>(n));
  put(8, static_cast<std::uint32_t>(d));
  return s;
}

// Network over a labeled graph: ids from the structured-id encoding, every
// node told (k, n, d).
inline NetworkInstance make_network(const Graph& labeled, int k) {
  NetworkInstance net;
  net.graph = labeled;
  net.ids = assign_ids(labeled);
  const int n = labeled.vertex_count();
  std::uint64_t max_id = 0;
  for (auto id : net.ids) max_id = std::max(max_id, id);
  int d = 1;
  if (n >= 2) {
    std::uint64_t range = static_cast<std::uint64_t>(n);
    while (range < max_id) {
      range *= static_cast<std::uint64_t>(n);
      ++d;
    }
  }
  net.inputs.assign(static_cast<std::size_t>(n), encode_node_input(k, n, d));
  return net;
}

// Canonical t-radius view: the id-relabeled induced subgraph around the root,
// vertices sorted by id, edges sorted as normalized id pairs, inputs aligned
// with the id list.
struct RadiusView {
  std::uint64_t root_id = 0;
  int radius = 0;
  std::vector<std::uint64_t> ids;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::vector<std::string> inputs;
};

inline RadiusView extract_view(const NetworkInstance& net, int v, int t) {
  const auto sub = radius_neighborhood(net.graph, v, t);
  RadiusView view;
  view.root_id = net.ids[static_cast<std::size_t>(v)];
  view.radius = t;
  const int m = sub.graph.vertex_count();
  std::vector<int> by_id(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) by_id[static_cast<std::size_t>(i)] = i;
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) {
    return net.ids[static_cast<std::size_t>(sub.vertices[static_cast<std::size_t>(a)])] <
           net.ids[static_cast<std::size_t>(sub.vertices[static_cast<std::size_t>(b)])];
  });
  for (int i : by_id) {
    const int orig = sub.vertices[static_cast<std::size_t>(i)];
    view.ids.push_back(net.ids[static_cast<std::size_t>(orig)]);
    view.inputs.push_back(net.inputs[static_cast<std::size_t>(orig)]);
  }
  for (const auto& [a, b] : sub.graph.edges()) {
    const std::uint64_t ia =
        net.ids[static_cast<std::size_t>(sub.vertices[static_cast<std::size_t>(a)])];
    const std::uint64_t ib =
        net.ids[static_cast<std::size_t>(sub.vertices[static_cast<std::size_t>(b)])];
    view.edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(view.edges.begin(), view.edges.end());
  return view;
}

// Exact view equality: root id, id set, id-pair edge set, and per-id inputs.
// Ids are globally unique, so no isomorphism search is needed.
inline bool views_equal(const RadiusView& a, const RadiusView& b) {
  return a.root_id == b.root_id && a.ids == b.ids && a.edges == b.edges &&
         a.inputs == b.inputs;
}

// A deterministic node program: output color computed from the radius view
// alone. An r-round execution gives each node its (r-1)-radius view.
struct NodeAlgorithm {
  std::string name;
  int rounds = 1;
  int palette = 1;
  std::function<int(const RadiusView&)> run;
};

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Coloring run_algorithm(const NetworkInstance& net,
                              const NodeAlgorithm& algo) {
  if (algo.rounds < 1) throw std::invalid_argument("round budget must be >= 1");
  const int n = net.graph.vertex_count();
  Coloring col{algo.palette, std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int v = 0; v < n; ++v) {
    const auto view = extract_view(net, v, algo.rounds - 1);
    const int out = algo.run(view);
    if (out < 1 || out > algo.palette) {
      throw SimulationError("algorithm output " + std::to_string(out) +
                            " at vertex " + std::to_string(v) +
                            " is outside {1.." + std::to_string(algo.palette) +
                            "}");
    }
    col.colors[static_cast<std::size_t>(v)] = out;
  }
  return col;
}

struct ViewComparison {
  std::uint64_t id = 0;
  int radius = 0;
  bool equal = false;
};

struct IndistReport {
  std::vector<ViewComparison> pairs;
  bool all_equal = true;
};

// Per-id view equality across two networks at a fixed radius.
inline IndistReport indistinguishability_report(
    const NetworkInstance& net_a, const NetworkInstance& net_b,
    const std::vector<std::uint64_t>& ids, int t) {
  IndistReport report;
  for (std::uint64_t id : ids) {
    const int va = net_a.vertex_of(id);
    const int vb = net_b.vertex_of(id);
    if (va < 0 || vb < 0) {
      throw std::invalid_argument("id " + std::to_string(id) +
                                  " missing from one of the networks");
    }
    const bool eq = views_equal(extract_view(net_a, va, t),
                                extract_view(net_b, vb, t));
    report.pairs.push_back({id, t, eq});
    report.all_equal = report.all_equal && eq;
  }
  return report;
}

struct EndpointOutputs {
  std::uint64_t id = 0;
  int color_g1 = 0;
  int color_g2 = 0;
};

struct LowerBoundDemoResult {
  int k = 0;
  int l = 0;
  int round_budget = 0;          // 3*(l/2-1)+1
  std::string algorithm;
  int rounds = 0;
  bool endpoint_agreement = true;
  std::vector<EndpointOutputs> endpoints;
  std::size_t g1_violations = 0;
  std::size_t g2_violations = 0;
  std::string verdict;
};

// Runs a within-budget algorithm on both graphs of the indistinguishable
// pair. Endpoint views coincide up to radius 3*(l/2-1), so a deterministic
// algorithm with rounds <= 3*(l/2-1)+1 must output the same endpoint colors
// in both graphs; color propagation along the clique path then forces an
// invalid coloring on at least one of the two.
inline LowerBoundDemoResult lower_bound_demo(int k, int l,
                                             const NodeAlgorithm& algo) {
  const int budget = 3 * (l / 2 - 1) + 1;
  if (algo.rounds > budget) {
    throw std::invalid_argument(
        "round budget " + std::to_string(algo.rounds) + " exceeds " +
        std::to_string(budget) + "; the indistinguishability radius no longer covers it");
  }
  if (algo.palette != k) {
    throw std::invalid_argument("demo algorithm must output colors from {1..k}");
  }
  const auto pair = indist_pair(k, l, Permutation::cyclic_shift(k));
  const auto net1 = make_network(pair.g1, k);
  const auto net2 = make_network(pair.g2, k);

  LowerBoundDemoResult res;
  res.k = k;
  res.l = l;
  res.round_budget = budget;
  res.algorithm = algo.name;
  res.rounds = algo.rounds;

  const auto col1 = run_algorithm(net1, algo);
  const auto col2 = run_algorithm(net2, algo);

  std::vector<int> endpoints = pair.left_column;
  endpoints.insert(endpoints.end(), pair.right_column.begin(),
                   pair.right_column.end());
  for (int v : endpoints) {
    EndpointOutputs e;
    e.id = net1.ids[static_cast<std::size_t>(v)];
    e.color_g1 = col1.colors[static_cast<std::size_t>(v)];
    e.color_g2 = col2.colors[static_cast<std::size_t>(v)];
    res.endpoint_agreement = res.endpoint_agreement && e.color_g1 == e.color_g2;
    res.endpoints.push_back(e);
  }

  const PartialSpec spec{k, k};
  res.g1_violations = verify_partial(pair.g1, col1, spec).size();
  res.g2_violations = verify_partial(pair.g2, col2, spec).size();

  std::string failed;
  if (res.g1_violations > 0 && res.g2_violations > 0) failed = "both graphs";
  else if (res.g1_violations > 0) failed = "graph 1";
  else if (res.g2_violations > 0) failed = "graph 2";
  else failed = "neither graph";
  res.verdict = "endpoint agreement " +
                std::string(res.endpoint_agreement ? "holds" : "broken") +
                "; coloring invalid on " + failed +
                " (agreeing endpoints plus color propagation rule out validity on both)";
  return res;
}

// --- algorithm corpus -------------------------------------------------------

inline NodeAlgorithm make_constant_algorithm(int rounds, int palette) {
  return {"constant", rounds, palette, [](const RadiusView&) { return 1; }};
}

inline NodeAlgorithm make_id_mod_algorithm(int rounds, int palette) {
  return {"id-mod", rounds, palette, [palette](const RadiusView& view) {
            return 1 + static_cast<int>(view.root_id %
                                        static_cast<std::uint64_t>(palette));
          }};
}

inline NodeAlgorithm make_id_hash_algorithm(int rounds, int palette) {
  return {"id-hash", rounds, palette, [palette](const RadiusView& view) {
            std::uint64_t z = view.root_id + 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            z ^= z >> 31;
            return 1 + static_cast<int>(z % static_cast<std::uint64_t>(palette));
          }};
}

// Rebuilds the view as a graph, runs the sequential greedy on it in id order,
// and reports the root's color clamped into the palette. With a full view this
// reproduces a global greedy run; with a truncated view it stays deterministic
// but loses global consistency.
inline NodeAlgorithm make_greedy_view_algorithm(int rounds, int palette,
                                                int greedy_k) {
  return {"greedy-view", rounds, palette,
          [palette, greedy_k](const RadiusView& view) {
            const int m = static_cast<int>(view.ids.size());
            std::map<std::uint64_t, int> index;
            for (int i = 0; i < m; ++i) index[view.ids[static_cast<std::size_t>(i)]] = i;
            std::vector<std::pair<int, int>> edges;
            for (const auto& [a, b] : view.edges) {
              edges.emplace_back(index.at(a), index.at(b));
            }
            const Graph local = Graph::build(m, edges);
            const Coloring col = greedy_partial(local, greedy_k);
            const int root = index.at(view.root_id);
            return std::min(col.colors[static_cast<std::size_t>(root)], palette);
          }};
}

inline std::vector<std::string> algorithm_names() {
  return {"constant", "id-mod", "id-hash", "greedy-view"};
}

inline NodeAlgorithm make_algorithm(const std::string& name, int rounds,
                                    int palette) {
  if (name == "constant") return make_constant_algorithm(rounds, palette);
  if (name == "id-mod") return make_id_mod_algorithm(rounds, palette);
  if (name == "id-hash") return make_id_hash_algorithm(rounds, palette);
  if (name == "greedy-view") {
    return make_greedy_view_algorithm(rounds, palette, palette - 1);
  }
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace partialcolor
