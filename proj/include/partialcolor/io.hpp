#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partialcolor/coloring.hpp"
#include "partialcolor/gadgets.hpp"
#include "partialcolor/graph.hpp"
#include "partialcolor/local_sim.hpp"

namespace partialcolor {

// --- edge-list text: first line "n m", then m lines "u v" (0-based) ---------

inline Graph read_edge_list(std::istream& in) {
  int n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header 'n m'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(e));
    }
    edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

// --- JSON graph format ------------------------------------------------------

inline nlohmann::json label_to_json(int vertex, const StructuredId& id) {
  nlohmann::json j;
  j["vertex"] = vertex;
  if (const auto* p = std::get_if<PlainId>(&id)) {
    j["kind"] = "plain";
    j["fields"] = {p->index};
  } else if (const auto* c = std::get_if<CliqueCoord>(&id)) {
    j["kind"] = "clique";
    j["fields"] = {c->a, c->i};
  } else {
    const auto& g = std::get<GadgetCoord>(id);
    j["kind"] = "gadget";
    j["fields"] = {g.ua, g.ui, g.va, g.vi, g.j};
  }
  return j;
}

inline StructuredId label_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind");
  const auto& f = j.at("fields");
  if (kind == "plain") return PlainId{f.at(0).get<std::int64_t>()};
  if (kind == "clique") return CliqueCoord{f.at(0).get<int>(), f.at(1).get<int>()};
  if (kind == "gadget") {
    return GadgetCoord{f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>(),
                       f.at(3).get<int>(), f.at(4).get<int>()};
  }
  throw std::invalid_argument("unknown label kind: " + kind);
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) {
    j["labels"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
      j["labels"].push_back(label_to_json(v, g.label(v)));
    }
  }
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  const int n = j.at("n");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  std::vector<StructuredId> labels;
  if (j.contains("labels")) {
    labels.resize(static_cast<std::size_t>(n));
    for (const auto& lj : j.at("labels")) {
      const int v = lj.at("vertex");
      if (v < 0 || v >= n) throw std::invalid_argument("label vertex out of range");
      labels[static_cast<std::size_t>(v)] = label_from_json(lj);
    }
  }
  return Graph::build(n, edges, std::move(labels));
}

// --- DOT export (vertex label = structured id when present) -----------------

inline std::string graph_to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v;
    if (g.has_labels()) out << " [label=\"" << to_string(g.label(v)) << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

// --- coloring / violations --------------------------------------------------

inline nlohmann::json coloring_to_json(const Coloring& col) {
  return {{"c", col.palette}, {"colors", col.colors}};
}

inline Coloring coloring_from_json(const nlohmann::json& j) {
  Coloring col;
  col.palette = j.at("c");
  col.colors = j.at("colors").get<std::vector<int>>();
  return col;
}

inline nlohmann::json violations_to_json(const std::vector<Violation>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : vs) {
    arr.push_back({{"vertex", v.vertex},
                   {"required", v.required},
                   {"achieved", v.achieved}});
  }
  return arr;
}

// --- simulator reports ------------------------------------------------------

inline nlohmann::json report_to_json(const IndistReport& report) {
  nlohmann::json j;
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : report.pairs) {
    j["pairs"].push_back({{"id", p.id}, {"radius", p.radius}, {"equal", p.equal}});
  }
  j["verdict"] = report.all_equal ? "all views equal" : "views differ";
  return j;
}

inline nlohmann::json demo_to_json(const LowerBoundDemoResult& res) {
  nlohmann::json j;
  j["k"] = res.k;
  j["l"] = res.l;
  j["algorithm"] = res.algorithm;
  j["rounds"] = res.rounds;
  j["round_budget"] = res.round_budget;
  j["radius_convention"] = "3*(l/2-1)";
  j["endpoint_agreement"] = res.endpoint_agreement;
  j["endpoints"] = nlohmann::json::array();
  for (const auto& e : res.endpoints) {
    j["endpoints"].push_back(
        {{"id", e.id}, {"color_g1", e.color_g1}, {"color_g2", e.color_g2}});
  }
  j["g1_violations"] = res.g1_violations;
  j["g2_violations"] = res.g2_violations;
  j["verdict"] = res.verdict;
  return j;
}

// --- file helpers -----------------------------------------------------------

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace partialcolor
