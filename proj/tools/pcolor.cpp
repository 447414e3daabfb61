// pcolor: generate, verify, color, and probe partial-coloring instances.
//
// Exit codes: 0 success/valid, 1 invalid/UNSAT/not-found, 2 usage error,
// 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partialcolor/coloring.hpp"
#include "partialcolor/exact.hpp"
#include "partialcolor/gadgets.hpp"
#include "partialcolor/graph.hpp"
#include "partialcolor/io.hpp"
#include "partialcolor/local_sim.hpp"
#include "partialcolor/search.hpp"

namespace pc = partialcolor;
using nlohmann::json;

namespace {

pc::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  // Sniff: JSON graphs start with '{', edge lists with the vertex count.
  const int first = in.peek();
  if (first == '{') {
    json j;
    in >> j;
    return pc::graph_from_json(j);
  }
  return pc::read_edge_list(in);
}

std::vector<pc::Permutation> parse_perms(const std::string& text, int k, int l) {
  if (text == "identity") {
    std::vector<pc::Permutation> perms;
    for (int i = 0; i + 1 < l; ++i) perms.push_back(pc::Permutation::identity(k));
    return perms;
  }
  const json j = json::parse(text);
  std::vector<pc::Permutation> perms;
  for (const auto& arr : j) {
    perms.push_back(pc::Permutation::from_image(arr.get<std::vector<int>>()));
  }
  return perms;
}

pc::Permutation parse_middle(const std::string& text, int k) {
  if (text == "shift") return pc::Permutation::cyclic_shift(k);
  return pc::Permutation::from_image(json::parse(text).get<std::vector<int>>());
}

void maybe_write_dot(const std::string& dot_path, const pc::Graph& g,
                     const std::string& name) {
  if (!dot_path.empty()) pc::write_text_file(dot_path, pc::graph_to_dot(g, name));
}

json obstruction_to_json(const pc::Obstruction& o) {
  json j = pc::graph_to_json(o.graph);
  j["delta_edge"] = o.delta_edge_value;
  j["delta_max"] = o.delta_max_value;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial-coloring toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate instance files");
  gen->require_subcommand(1);

  int gk = 3, gl = 4;
  std::string gperms = "identity", gout, gdot, gmiddle = "shift", gprefix, gin;
  std::string gorient = "lower";

  auto* gen_poc = gen->add_subcommand("path-of-cliques", "clique-path graph");
  gen_poc->add_option("--k", gk, "clique size (>= 3)")->required();
  gen_poc->add_option("--l", gl, "number of columns (>= 2)")->required();
  gen_poc->add_option("--perms", gperms,
                      "'identity' or JSON list of 1-based image arrays");
  gen_poc->add_option("--out", gout, "output JSON graph path")->required();
  gen_poc->add_option("--dot", gdot, "optional DOT output path");

  auto* gen_pair = gen->add_subcommand("indist-pair",
                                       "gadget-transformed indistinguishable pair");
  gen_pair->add_option("--k", gk)->required();
  gen_pair->add_option("--l", gl, "even number of columns (>= 4)")->required();
  gen_pair->add_option("--middle", gmiddle,
                       "'shift' or JSON image array for the middle anti-matching");
  gen_pair->add_option("--out-prefix", gprefix, "writes <prefix>_g1.json and <prefix>_g2.json")
      ->required();

  auto* gen_gadget = gen->add_subcommand("gadget-transform",
                                         "replace every edge by the k-gadget");
  gen_gadget->add_option("--k", gk)->required();
  gen_gadget->add_option("--in", gin, "input graph (JSON or edge-list)")->required();
  gen_gadget->add_option("--out", gout)->required();
  gen_gadget->add_option("--orientation", gorient, "lower|higher endpoint plays the u role")
      ->check(CLI::IsMember({"lower", "higher"}));
  gen_gadget->add_option("--dot", gdot);

  // verify
  std::string vgraph, vcoloring;
  int vk = 0, vc = 0;
  auto* verify = app.add_subcommand("verify", "check a k-partial c-coloring");
  verify->add_option("--graph", vgraph)->required();
  verify->add_option("--coloring", vcoloring)->required();
  verify->add_option("--k", vk)->required();
  verify->add_option("--c", vc)->required();

  // color
  std::string cgraph, cmode = "greedy", cout_path;
  int ck = 0, cc = 0;
  std::uint64_t cbudget = pc::kDefaultDecideBudget;
  auto* color = app.add_subcommand("color", "compute a coloring");
  color->add_option("--graph", cgraph)->required();
  color->add_option("--mode", cmode)->check(CLI::IsMember({"greedy", "exact"}));
  color->add_option("--k", ck)->required();
  color->add_option("--c", cc, "palette size (default k+1 greedy, k exact)");
  color->add_option("--budget", cbudget, "exact-search node budget");
  color->add_option("--out", cout_path, "coloring JSON output path");

  // demo-lower-bound
  int dk = 3, dl = 6, drounds = 0;
  std::string dalgo = "constant";
  auto* demo = app.add_subcommand("demo-lower-bound",
                                  "run a budgeted algorithm on the indistinguishable pair");
  demo->add_option("--k", dk)->required();
  demo->add_option("--l", dl)->required();
  demo->add_option("--algo", dalgo)->check(CLI::IsMember(pc::algorithm_names()));
  demo->add_option("--rounds", drounds, "round budget (default: maximum allowed)");

  // search-obstructions
  int sk = 3, smaxn = 7, sreq_delta = -1;
  bool sallow_clique = false;
  std::size_t smax_results = 8;
  auto* search = app.add_subcommand("search-obstructions",
                                    "find small graphs with delta_edge = k and no k-partial k-coloring");
  search->add_option("--k", sk)->required();
  search->add_option("--max-n", smaxn)->required();
  search->add_flag("--allow-clique", sallow_clique, "do not exclude (k+1)-cliques");
  search->add_option("--require-delta", sreq_delta, "keep only graphs with this maximum degree");
  search->add_option("--max-results", smax_results);

  // sim-compare-views
  std::string sva, svb, svids;
  int svradius = 0, svk = 3;
  auto* simcmp = app.add_subcommand("sim-compare-views",
                                    "compare radius views across two labeled graphs");
  simcmp->add_option("--graph-a", sva)->required();
  simcmp->add_option("--graph-b", svb)->required();
  simcmp->add_option("--radius", svradius)->required();
  simcmp->add_option("--k", svk, "input parameter handed to every node");
  simcmp->add_option("--ids", svids, "comma-separated encoded ids (default: clique-column endpoints)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_poc->parsed()) {
      pc::PathOfCliquesSpec spec{gk, gl, parse_perms(gperms, gk, gl)};
      const pc::Graph g = pc::path_of_cliques(spec);
      pc::write_json_file(gout, pc::graph_to_json(g));
      maybe_write_dot(gdot, g, "path_of_cliques");
      std::cout << "wrote " << gout << " (" << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges)\n";
      return 0;
    }
    if (gen_pair->parsed()) {
      const auto pair = pc::indist_pair(gk, gl, parse_middle(gmiddle, gk));
      pc::write_json_file(gprefix + "_g1.json", pc::graph_to_json(pair.g1));
      pc::write_json_file(gprefix + "_g2.json", pc::graph_to_json(pair.g2));
      std::cout << "wrote " << gprefix << "_g1.json and " << gprefix
                << "_g2.json (" << pair.g1.vertex_count() << " vertices each)\n";
      return 0;
    }
    if (gen_gadget->parsed()) {
      const pc::Graph g = load_graph(gin);
      const auto orientation = gorient == "lower"
                                   ? pc::GadgetOrientation::LowerHandleFirst
                                   : pc::GadgetOrientation::HigherHandleFirst;
      const auto result = pc::edge_gadget_transform(g, gk, orientation);
      pc::write_json_file(gout, pc::graph_to_json(result.graph));
      maybe_write_dot(gdot, result.graph, "gadget_transform");
      std::cout << "wrote " << gout << " (" << result.graph.vertex_count()
                << " vertices)\n";
      return 0;
    }
    if (verify->parsed()) {
      const pc::Graph g = load_graph(vgraph);
      const pc::Coloring col = pc::coloring_from_json(pc::read_json_file(vcoloring));
      const auto violations = pc::verify_partial(g, col, pc::PartialSpec{vk, vc});
      std::cout << pc::violations_to_json(violations).dump(2) << "\n";
      return violations.empty() ? 0 : 1;
    }
    if (color->parsed()) {
      const pc::Graph g = load_graph(cgraph);
      pc::Coloring col;
      if (cmode == "greedy") {
        col = pc::greedy_partial(g, ck);
      } else {
        const int c = cc > 0 ? cc : ck;
        const auto res = pc::decide_exact(g, pc::PartialSpec{ck, c}, cbudget);
        if (res.status == pc::DecideStatus::BudgetExceeded) {
          std::cerr << "budget exceeded after " << res.nodes << " nodes\n";
          return 3;
        }
        if (res.status == pc::DecideStatus::Unsatisfiable) {
          std::cout << "UNSAT\n";
          return 1;
        }
        col = *res.coloring;
      }
      const json j = pc::coloring_to_json(col);
      if (!cout_path.empty()) pc::write_json_file(cout_path, j);
      else std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (demo->parsed()) {
      const int budget = 3 * (dl / 2 - 1) + 1;
      const int rounds = drounds > 0 ? drounds : budget;
      const auto algo = pc::make_algorithm(dalgo, rounds, dk);
      const auto res = pc::lower_bound_demo(dk, dl, algo);
      std::cout << pc::demo_to_json(res).dump(2) << "\n";
      return 0;
    }
    if (search->parsed()) {
      pc::ObstructionQuery q;
      q.k = sk;
      q.max_n = smaxn;
      q.require_no_bigger_clique = !sallow_clique;
      if (sreq_delta >= 0) q.require_delta_max = sreq_delta;
      q.max_results = smax_results;
      const auto res = pc::search_obstructions(q);
      json j;
      j["candidates_checked"] = res.candidates_checked;
      j["budget_exhausted"] = res.budget_exhausted;
      j["smallest_n"] = res.smallest_n;
      j["found"] = json::array();
      for (const auto& o : res.found) j["found"].push_back(obstruction_to_json(o));
      std::cout << j.dump(2) << "\n";
      if (res.found.empty()) return res.budget_exhausted > 0 ? 3 : 1;
      return 0;
    }
    if (simcmp->parsed()) {
      const auto net_a = pc::make_network(load_graph(sva), svk);
      const auto net_b = pc::make_network(load_graph(svb), svk);
      std::vector<std::uint64_t> ids;
      if (!svids.empty()) {
        std::stringstream ss(svids);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(std::stoull(tok));
      } else {
        // Default: clique-column endpoints shared by both graphs.
        int k = 0, l = 0;
        for (const auto& id : net_a.graph.labels()) {
          if (const auto* c = std::get_if<pc::CliqueCoord>(&id)) {
            k = std::max(k, c->a);
            l = std::max(l, c->i);
          }
        }
        if (k == 0) throw std::runtime_error(
            "no clique labels present; pass --ids explicitly");
        for (int v = 0; v < net_a.graph.vertex_count(); ++v) {
          if (const auto* c = std::get_if<pc::CliqueCoord>(&net_a.graph.label(v))) {
            if (c->i == 1 || c->i == l) ids.push_back(net_a.ids[static_cast<std::size_t>(v)]);
          }
        }
      }
      const auto report = pc::indistinguishability_report(net_a, net_b, ids, svradius);
      std::cout << pc::report_to_json(report).dump(2) << "\n";
      return report.all_equal ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
