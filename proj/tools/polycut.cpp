#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/hypergraph.hpp"
#include "polycut/relax.hpp"
#include "polycut/rounding.hpp"
#include "polycut/spectral.hpp"

namespace {

using nlohmann::json;
using namespace polycut;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(json_out);
    if (!out) throw InputError("cannot write " + json_out);
    out << j.dump(2) << "\n";
  }
}

json cut_json(const PolyNetwork& net, const std::vector<int>& side,
              const std::map<int, int>& assignment, double value,
              double objective) {
  json j;
  j["set"] = json::array();
  for (int v : side) j["set"].push_back(net.vertices()[v].id);
  j["assignment"] = json::object();
  for (const auto& [e, v] : assignment)
    j["assignment"][net.edges()[e].id] = net.vertices()[v].id;
  j["value"] = value;
  j["objective"] = objective;
  return j;
}

std::vector<int> parse_set(const PolyNetwork& net, const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) out.push_back(net.vertex_index(tok));
  return out;
}

struct SdpFlags {
  SdpOptions opts;
  void attach(CLI::App* cmd) {
    cmd->add_option("--sdp-tol", opts.tol, "solver tolerance");
    cmd->add_option("--sdp-max-iters", opts.max_iters, "iteration cap");
    cmd->add_option("--sdp-seed", opts.seed, "solver seed");
    cmd->add_option("--sdp-penalty", opts.penalty, "initial penalty weight");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparsest cuts, conductance, and spectral gaps in "
               "polymatroidal networks and hypergraphs"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string net_path, set_csv, json_out, method = "sdp";
  unsigned seed = 1;
  int retries = 32, restarts = 4, only = 0;
  bool symmetric = false;
  SdpFlags sdp;

  auto* cmd_eval = app.add_subcommand("eval-cut", "evaluate a vertex set");
  cmd_eval->add_option("net", net_path)->required();
  cmd_eval->add_option("--set", set_csv, "comma-separated vertex ids")
      ->required();
  cmd_eval->add_option("--json-out", json_out);

  auto* cmd_sparse = app.add_subcommand("sparsest", "approximate sparsest cut");
  cmd_sparse->add_option("net", net_path)->required();
  cmd_sparse->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "sdp"}));
  cmd_sparse->add_option("--seed", seed);
  cmd_sparse->add_option("--json-out", json_out);
  sdp.attach(cmd_sparse);

  auto* cmd_cond = app.add_subcommand("conductance", "approximate conductance");
  cmd_cond->add_option("net", net_path)->required();
  cmd_cond->add_flag("--symmetric", symmetric);
  cmd_cond->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "spectral"}));
  cmd_cond->add_option("--seed", seed);
  cmd_cond->add_option("--retries", retries);
  cmd_cond->add_option("--json-out", json_out);
  sdp.attach(cmd_cond);

  auto* cmd_gamma = app.add_subcommand("gamma2", "spectral gap upper estimate");
  cmd_gamma->add_option("net", net_path)->required();
  cmd_gamma->add_option("--restarts", restarts);
  cmd_gamma->add_option("--seed", seed);
  cmd_gamma->add_option("--json-out", json_out);

  auto* cmd_h = app.add_subcommand("hypergraph", "hypergraph objectives");
  cmd_h->require_subcommand(1);
  std::string h_path;
  for (const char* verb : {"sparsest", "conductance", "psi"}) {
    auto* sub = cmd_h->add_subcommand(verb);
    sub->add_option("hypergraph", h_path)->required();
    sub->add_option("--method", method)
        ->check(CLI::IsMember({"brute", "sdp"}));
    sub->add_option("--seed", seed);
    sub->add_option("--retries", retries);
    sub->add_option("--json-out", json_out);
    sdp.attach(sub);
  }

  auto* cmd_vx = app.add_subcommand("vertex-expansion",
                                    "symmetric vertex expansion of a graph");
  cmd_vx->add_option("graph", net_path)->required();
  cmd_vx->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "sdp"}));
  cmd_vx->add_option("--seed", seed);
  cmd_vx->add_option("--retries", retries);
  cmd_vx->add_option("--json-out", json_out);
  sdp.attach(cmd_vx);

  auto* cmd_gen = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind = "network";
  int gen_n = 6, gen_m = 10, gen_k = 4;
  cmd_gen->add_option("kind", gen_kind)
      ->check(CLI::IsMember({"network", "hypergraph", "graph"}));
  cmd_gen->add_option("--n", gen_n);
  cmd_gen->add_option("--m", gen_m);
  cmd_gen->add_option("--k", gen_k);
  cmd_gen->add_option("--seed", seed);
  cmd_gen->add_option("--json-out", json_out);

  auto* cmd_suite = app.add_subcommand("suite", "run the acceptance suite");
  cmd_suite->add_option("--seed", seed);
  cmd_suite->add_option("--only", only, "single criterion id");
  cmd_suite->add_option("--json-out", json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_eval->parsed()) {
      const PolyNetwork net = PolyNetwork::from_json(load_json(net_path));
      const std::vector<int> s = parse_set(net, set_csv);
      json j;
      j["cutval"] = net.cutval(s);
      j["symcutval"] = net.symcutval(s);
      j["volume"] = net.volume(s);
      try {
        j["sparsity"] = net.sparsity(s);
        j["conductance"] = net.conductance(s);
        j["symmetric_conductance"] = net.sym_conductance(s);
      } catch (const DegenerateCut&) {
        j["degenerate"] = true;
      }
      emit(j, json_out);
    } else if (cmd_sparse->parsed()) {
      const PolyNetwork net = PolyNetwork::from_json(load_json(net_path));
      json j;
      if (method == "brute") {
        const BruteCut b = brute_sparsest(net);
        j = cut_json(net, b.side, net.cut_cost(net.boundary(b.side, CutSide::Plus)).owner,
                     net.cutval(b.side), b.value);
      } else {
        SdpOptions opts = sdp.opts;
        opts.seed = opts.seed == 1 ? seed : opts.seed;
        const PipelineResult r = sparsest_cut_pipeline(net, opts);
        j = cut_json(net, r.cut.side, r.cut.assignment, r.cut.cut_value,
                     r.cut.objective_value);
        j["certificates"] = {{"sdp_objective", r.sdp_objective},
                             {"sweep_guarantee", r.cut.guarantee}};
      }
      emit(j, json_out);
    } else if (cmd_cond->parsed()) {
      const PolyNetwork net = PolyNetwork::from_json(load_json(net_path));
      json j;
      if (method == "brute") {
        const BruteCut b =
            symmetric ? brute_sym_conductance(net) : brute_conductance(net);
        j = cut_json(net, b.side, {}, net.cutval(b.side), b.value);
      } else {
        SdpOptions opts = sdp.opts;
        opts.seed = opts.seed == 1 ? seed : opts.seed;
        const PipelineResult r =
            conductance_pipeline(net, opts, retries, seed, symmetric);
        j = cut_json(net, r.cut.side, r.cut.assignment, r.cut.cut_value,
                     r.cut.objective_value);
        j["certificates"] = {{"sdp_objective", r.sdp_objective},
                             {"rayleigh", r.rayleigh_value},
                             {"cheeger_guarantee", r.cut.guarantee}};
      }
      emit(j, json_out);
    } else if (cmd_gamma->parsed()) {
      const PolyNetwork net = PolyNetwork::from_json(load_json(net_path));
      const GapEstimate g = estimate_gamma2(net, restarts, seed);
      json j;
      j["upper"] = g.upper;
      j["converged"] = g.converged;
      j["certificate"] = {{"vertex", g.certificate.vertex},
                          {"edge", g.certificate.edge}};
      j["cut"] = cut_json(net, g.cut.side, g.cut.assignment, g.cut.cut_value,
                          g.cut.objective_value);
      emit(j, json_out);
    } else if (cmd_h->parsed()) {
      const PolyHypergraph h = PolyHypergraph::from_json(load_json(h_path));
      json j;
      auto vids = [&](const std::vector<int>& s) {
        json a = json::array();
        for (int v : s) a.push_back(h.vertices()[v].id);
        return a;
      };
      auto eids = [&](const std::vector<int>& s) {
        json a = json::array();
        for (int e : s) a.push_back(h.edges()[e].id);
        return a;
      };
      if (cmd_h->get_subcommand("sparsest")->parsed()) {
        if (method == "brute") {
          const BruteCut b = brute_h_sparsest(h);
          j = {{"set", vids(b.side)}, {"objective", b.value}};
        } else {
          const HSparsestResult r = h_sparsest_pipeline(h, sdp.opts);
          j = {{"set", vids(r.side)},
               {"objective", r.sparsity},
               {"certificates",
                {{"factor_sparsity", r.factor_sparsity},
                 {"sdp_objective", r.sdp_objective}}}};
        }
      } else if (cmd_h->get_subcommand("conductance")->parsed()) {
        if (method == "brute") {
          const BruteHCut b = brute_h_sym_conductance(h);
          j = {{"vertex_set", vids(b.vset)},
               {"edge_set", eids(b.eset)},
               {"objective", b.value}};
        } else {
          const HConductanceResult r =
              h_conductance_pipeline(h, sdp.opts, retries, seed);
          j = {{"vertex_set", vids(r.vset)},
               {"edge_set", eids(r.eset)},
               {"objective", r.sym_conductance},
               {"certificates",
                {{"factor_value", r.factor_value},
                 {"sdp_objective", r.sdp_objective},
                 {"rayleigh", r.rayleigh_value}}}};
        }
      } else {
        std::vector<double> w(h.k());
        for (int e = 0; e < h.k(); ++e) w[e] = h.edge_degree(e) / 2;
        if (method == "brute") {
          const BruteCut b = brute_psi(h, w);
          j = {{"set", vids(b.side)}, {"objective", b.value}};
        } else {
          const PsiResult r = psi_pipeline(h, w, sdp.opts, retries, seed);
          j = {{"set", vids(r.t)},
               {"objective", r.psi_value},
               {"certificates",
                {{"symmetric_conductance", r.sym_conductance}}}};
        }
      }
      emit(j, json_out);
    } else if (cmd_vx->parsed()) {
      const json j = load_json(net_path);
      std::vector<Vertex> vertices;
      std::map<std::string, int> vidx;
      for (const auto& vj : j.at("vertices")) {
        Vertex v;
        v.id = vj.at("id").get<std::string>();
        v.weight = vj.value("weight", 1.0);
        vidx[v.id] = static_cast<int>(vertices.size());
        vertices.push_back(std::move(v));
      }
      std::vector<std::vector<int>> adjacency(vertices.size());
      for (const auto& ej : j.at("edges")) {
        const int a = vidx.at(ej.at(0).get<std::string>());
        const int b = vidx.at(ej.at(1).get<std::string>());
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
      }
      json out;
      std::vector<double> w;
      const PolyHypergraph h = vertex_expansion_reduce(vertices, adjacency, &w);
      if (method == "brute") {
        const BruteCut b = brute_sym_vertex_expansion(vertices, adjacency);
        out["set"] = json::array();
        for (int v : b.side) out["set"].push_back(vertices[v].id);
        out["objective"] = b.value;
      } else {
        const PsiResult r = psi_pipeline(h, w, sdp.opts, retries, seed);
        out["set"] = json::array();
        for (int v : r.t) out["set"].push_back(vertices[v].id);
        out["objective"] = sym_vertex_expansion(vertices, adjacency, r.t);
        out["certificates"] = {{"psi", r.psi_value},
                               {"symmetric_conductance", r.sym_conductance}};
      }
      emit(out, json_out);
    } else if (cmd_gen->parsed()) {
      std::mt19937_64 rng(seed);
      json j;
      if (gen_kind == "network") {
        j = random_network(rng, gen_n, gen_m).to_json();
      } else if (gen_kind == "hypergraph") {
        j = random_hypergraph(rng, gen_n, gen_k).to_json();
      } else {
        std::vector<Vertex> vertices;
        std::vector<std::vector<int>> adjacency;
        random_graph(rng, gen_n, &vertices, &adjacency);
        j["vertices"] = json::array();
        for (const Vertex& v : vertices)
          j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
        j["edges"] = json::array();
        for (size_t a = 0; a < adjacency.size(); ++a)
          for (int b : adjacency[a])
            if (static_cast<int>(a) < b)
              j["edges"].push_back({vertices[a].id, vertices[b].id});
      }
      emit(j, json_out);
    } else if (cmd_suite->parsed()) {
      const std::vector<CriterionResult> results =
          run_suite(seed, &std::cout, only);
      json j = json::array();
      bool ok = true;
      for (const CriterionResult& r : results) {
        ok = ok && r.passed;
        j.push_back({{"criterion", r.id},
                     {"name", r.name},
                     {"pass", r.passed},
                     {"detail", r.detail},
                     {"runtime_seconds", r.seconds}});
      }
      if (!json_out.empty()) emit(j, json_out);
      return ok ? 0 : 1;
    }
  } catch (const InputError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
