#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/hypergraph.hpp"
#include "polycut/relax.hpp"
#include "polycut/rounding.hpp"
#include "polycut/spectral.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace polycut;

namespace {

PolyNetwork net_of(const std::string& s) {
  return PolyNetwork::from_json(json::parse(s));
}

PolyHypergraph hg_of(const std::string& s) {
  return PolyHypergraph::from_json(json::parse(s));
}

py::dict cut_dict(const PolyNetwork& net, const std::vector<int>& side,
                  double objective) {
  py::list ids;
  for (int v : side) ids.append(net.vertices()[v].id);
  py::dict d;
  d["set"] = ids;
  d["objective"] = objective;
  return d;
}

}  // namespace

PYBIND11_MODULE(_polycut, m) {
  m.doc() = "sparsest cuts, conductance, and spectral gaps in polymatroidal "
            "networks and hypergraphs";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<DegenerateCut>(m, "DegenerateCut");

  m.def("eval_cut", [](const std::string& net_json,
                       const std::vector<std::string>& ids) {
    const PolyNetwork net = net_of(net_json);
    std::vector<int> s;
    for (const std::string& id : ids) s.push_back(net.vertex_index(id));
    py::dict d;
    d["cutval"] = net.cutval(s);
    d["symcutval"] = net.symcutval(s);
    d["volume"] = net.volume(s);
    return d;
  });

  m.def("brute_sparsest", [](const std::string& net_json) {
    const PolyNetwork net = net_of(net_json);
    const BruteCut b = brute_sparsest(net);
    return cut_dict(net, b.side, b.value);
  });

  m.def("brute_conductance",
        [](const std::string& net_json, bool symmetric) {
          const PolyNetwork net = net_of(net_json);
          const BruteCut b =
              symmetric ? brute_sym_conductance(net) : brute_conductance(net);
          return cut_dict(net, b.side, b.value);
        },
        py::arg("net_json"), py::arg("symmetric") = false);

  m.def("sparsest_cut",
        [](const std::string& net_json, unsigned seed, int max_iters) {
          const PolyNetwork net = net_of(net_json);
          SdpOptions opts;
          opts.seed = seed;
          opts.max_iters = max_iters;
          const PipelineResult r = sparsest_cut_pipeline(net, opts);
          py::dict d = cut_dict(net, r.cut.side, r.cut.objective_value);
          d["sdp_objective"] = r.sdp_objective;
          return d;
        },
        py::arg("net_json"), py::arg("seed") = 1,
        py::arg("max_iters") = 20000);

  m.def("conductance",
        [](const std::string& net_json, bool symmetric, unsigned seed,
           int retries, int max_iters) {
          const PolyNetwork net = net_of(net_json);
          SdpOptions opts;
          opts.seed = seed;
          opts.max_iters = max_iters;
          const PipelineResult r =
              conductance_pipeline(net, opts, retries, seed, symmetric);
          py::dict d = cut_dict(net, r.cut.side, r.cut.objective_value);
          d["sdp_objective"] = r.sdp_objective;
          d["rayleigh"] = r.rayleigh_value;
          return d;
        },
        py::arg("net_json"), py::arg("symmetric") = true, py::arg("seed") = 1,
        py::arg("retries") = 32, py::arg("max_iters") = 20000);

  m.def("gamma2",
        [](const std::string& net_json, int restarts, unsigned seed) {
          const PolyNetwork net = net_of(net_json);
          const GapEstimate g = estimate_gamma2(net, restarts, seed);
          py::dict d;
          d["upper"] = g.upper;
          d["converged"] = g.converged;
          d["cut"] = cut_dict(net, g.cut.side, g.cut.objective_value);
          return d;
        },
        py::arg("net_json"), py::arg("restarts") = 4, py::arg("seed") = 1);

  m.def("h_sparsest", [](const std::string& h_json) {
    const PolyHypergraph h = hg_of(h_json);
    const HSparsestResult r = h_sparsest_pipeline(h);
    py::list ids;
    for (int v : r.side) ids.append(h.vertices()[v].id);
    py::dict d;
    d["set"] = ids;
    d["objective"] = r.sparsity;
    d["sdp_objective"] = r.sdp_objective;
    return d;
  });

  m.def("h_conductance", [](const std::string& h_json) {
    const PolyHypergraph h = hg_of(h_json);
    const HConductanceResult r = h_conductance_pipeline(h);
    py::list vids, eids;
    for (int v : r.vset) vids.append(h.vertices()[v].id);
    for (int e : r.eset) eids.append(h.edges()[e].id);
    py::dict d;
    d["vertex_set"] = vids;
    d["edge_set"] = eids;
    d["objective"] = r.sym_conductance;
    return d;
  });

  m.def("random_network_json", [](unsigned seed, int n, int m) {
    std::mt19937_64 rng(seed);
    return random_network(rng, n, m).to_json().dump();
  }, py::arg("seed"), py::arg("n"), py::arg("m"));

  m.def("random_hypergraph_json", [](unsigned seed, int n, int k) {
    std::mt19937_64 rng(seed);
    return random_hypergraph(rng, n, k).to_json().dump();
  }, py::arg("seed"), py::arg("n"), py::arg("k"));

  m.def("run_suite", [](unsigned seed, int only) {
    py::list out;
    for (const CriterionResult& r : run_suite(seed, nullptr, only)) {
      py::dict d;
      d["criterion"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.passed;
      d["detail"] = r.detail;
      d["runtime_seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 1, py::arg("only") = 0);
}
