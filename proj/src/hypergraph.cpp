#include "polycut/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

std::uint32_t member_mask(const Hyperedge& e, const std::vector<char>& in_set) {
  std::uint32_t mask = 0;
  for (size_t k = 0; k < e.members.size(); ++k)
    if (in_set[e.members[k]]) mask |= 1u << k;
  return mask;
}

}  // namespace

PolyHypergraph::PolyHypergraph(std::vector<Vertex> vertices,
                               std::vector<Hyperedge> edges,
                               std::vector<SubmodularFn> f_plus,
                               std::vector<SubmodularFn> f_minus)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      f_plus_(std::move(f_plus)),
      f_minus_(std::move(f_minus)) {
  require(f_plus_.size() == edges_.size() && f_minus_.size() == edges_.size(),
          "hypergraph: splitting function count mismatch");
  for (const auto& e : edges_) {
    require(!e.members.empty(), "hypergraph: empty hyperedge " + e.id);
    for (int v : e.members)
      require(v >= 0 && v < n(), "hypergraph: member out of range in " + e.id);
  }
  for (int e = 0; e < k(); ++e) {
    require(f_plus_[e].size() == static_cast<int>(edges_[e].members.size()) &&
                f_minus_[e].size() == static_cast<int>(edges_[e].members.size()),
            "hypergraph: splitting function ground mismatch at " + edges_[e].id);
    for (size_t j = 0; j < edges_[e].members.size(); ++j) {
      const std::string& vid = vertices_[edges_[e].members[j]].id;
      require(f_plus_[e].ground()[j] == vid && f_minus_[e].ground()[j] == vid,
              "hypergraph: splitting ground order mismatch at " + edges_[e].id);
    }
  }
  deg_.resize(k());
  for (int e = 0; e < k(); ++e) {
    deg_[e] = f_plus_[e].total() + f_minus_[e].total();
    total_volume_ += deg_[e];
  }
  for (const auto& v : vertices_) total_weight_ += v.weight;
}

PolyHypergraph PolyHypergraph::uniform(std::vector<Vertex> vertices,
                                       std::vector<Hyperedge> edges,
                                       std::vector<double> edge_weights) {
  require(edge_weights.size() == edges.size(),
          "hypergraph: edge weight count mismatch");
  std::vector<SubmodularFn> fp, fm;
  for (size_t e = 0; e < edges.size(); ++e) {
    require(edge_weights[e] >= 0, "hypergraph: negative edge weight");
    std::vector<std::string> ground;
    for (int v : edges[e].members) ground.push_back(vertices[v].id);
    std::vector<double> w(ground.size(), edge_weights[e]);
    fp.push_back(SubmodularFn::capped_additive(ground, w, edge_weights[e]));
    fm.push_back(fp.back());
  }
  return PolyHypergraph(std::move(vertices), std::move(edges), std::move(fp),
                        std::move(fm));
}

double PolyHypergraph::cutval(const std::vector<int>& s) const {
  std::vector<char> in(n(), 0);
  for (int v : s) in[v] = 1;
  double total = 0;
  for (int e = 0; e < k(); ++e) {
    const std::uint32_t inside = member_mask(edges_[e], in);
    const std::uint32_t full = f_plus_[e].full_mask();
    if (inside == 0 || inside == full) continue;
    total += std::min(f_minus_[e].eval_mask(inside),
                      f_plus_[e].eval_mask(full & ~inside));
  }
  return total;
}

double PolyHypergraph::sparsity(const std::vector<int>& s) const {
  double ws = 0;
  for (int v : s) ws += vertices_[v].weight;
  const double denom = ws * (total_weight_ - ws);
  if (denom <= 0) throw DegenerateCut("hypergraph sparsity: unbalanced set");
  return cutval(s) / denom;
}

bool PolyHypergraph::admissible(const std::vector<int>& vset,
                                const std::vector<int>& eset) const {
  std::vector<char> in(n(), 0);
  for (int v : vset) in[v] = 1;
  for (int e : eset) {
    bool touched = false;
    for (int v : edges_[e].members) touched = touched || in[v];
    if (!touched) return false;
  }
  return true;
}

double PolyHypergraph::sym_cut(const std::vector<int>& vset,
                               const std::vector<int>& eset) const {
  std::vector<char> in(n(), 0);
  for (int v : vset) in[v] = 1;
  double total = 0;
  for (int e : eset) {
    const std::uint32_t inside = member_mask(edges_[e], in);
    const std::uint32_t full = f_plus_[e].full_mask();
    if (inside == 0 || inside == full) continue;  // not a boundary edge
    const std::uint32_t outside = full & ~inside;
    total += f_minus_[e].eval_mask(outside) + f_plus_[e].eval_mask(outside);
  }
  return total;
}

double PolyHypergraph::sym_conductance(const std::vector<int>& vset,
                                       const std::vector<int>& eset) const {
  if (!admissible(vset, eset))
    throw InputError("sym_conductance: inadmissible set");
  double vol = 0;
  for (int e : eset) vol += deg_[e];
  const double denom = std::min(vol, total_volume_ - vol);
  if (denom <= 0) throw DegenerateCut("sym_conductance: unbalanced volume");
  const std::vector<int> cvset = complement_set(n(), vset);
  std::vector<char> in_e(k(), 0);
  for (int e : eset) in_e[e] = 1;
  std::vector<int> ceset;
  for (int e = 0; e < k(); ++e)
    if (!in_e[e]) ceset.push_back(e);
  return (sym_cut(vset, eset) + sym_cut(cvset, ceset)) / denom;
}

PolyHypergraph PolyHypergraph::from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("vertices") && j.contains("hyperedges"),
          "hypergraph: need vertices and hyperedges");
  std::vector<Vertex> vertices;
  std::map<std::string, int> vidx;
  for (const auto& vj : j.at("vertices")) {
    Vertex v;
    v.id = vj.at("id").get<std::string>();
    v.weight = vj.value("weight", 1.0);
    vidx[v.id] = static_cast<int>(vertices.size());
    vertices.push_back(std::move(v));
  }
  std::vector<Hyperedge> edges;
  for (const auto& ej : j.at("hyperedges")) {
    Hyperedge e;
    e.id = ej.at("id").get<std::string>();
    for (const auto& mid : ej.at("members")) {
      const std::string ms = mid.get<std::string>();
      require(vidx.count(ms), "hypergraph: unknown member " + ms);
      e.members.push_back(vidx[ms]);
    }
    edges.push_back(std::move(e));
  }
  const nlohmann::json fns =
      j.contains("functions") ? j.at("functions") : nlohmann::json::object();
  const nlohmann::json ews = j.contains("edge_weights") ? j.at("edge_weights")
                                                        : nlohmann::json::object();
  std::vector<SubmodularFn> fp, fm;
  for (const auto& e : edges) {
    if (fns.contains(e.id)) {
      fp.push_back(SubmodularFn::from_json(fns.at(e.id).at("plus")));
      fm.push_back(SubmodularFn::from_json(fns.at(e.id).at("minus")));
    } else {
      const double w = ews.contains(e.id) ? ews.at(e.id).get<double>() : 1.0;
      std::vector<std::string> ground;
      for (int v : e.members) ground.push_back(vertices[v].id);
      fp.push_back(SubmodularFn::capped_additive(
          ground, std::vector<double>(ground.size(), w), w));
      fm.push_back(fp.back());
    }
  }
  return PolyHypergraph(std::move(vertices), std::move(edges), std::move(fp),
                        std::move(fm));
}

nlohmann::json PolyHypergraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices_)
    j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  j["hyperedges"] = nlohmann::json::array();
  nlohmann::json fns = nlohmann::json::object();
  for (int e = 0; e < k(); ++e) {
    nlohmann::json members = nlohmann::json::array();
    for (int v : edges_[e].members) members.push_back(vertices_[v].id);
    j["hyperedges"].push_back({{"id", edges_[e].id}, {"members", members}});
    fns[edges_[e].id] = {{"plus", f_plus_[e].to_json()},
                         {"minus", f_minus_[e].to_json()}};
  }
  j["functions"] = std::move(fns);
  return j;
}

FactorGraph factor_graph(const PolyHypergraph& h) {
  double max_cap = 0;
  for (int e = 0; e < h.k(); ++e)
    max_cap = std::max({max_cap, h.f_plus(e).total(), h.f_minus(e).total()});
  const double large = 1e9 * (max_cap + 1.0);
  require(std::isfinite(large), "factor_graph: capacity overflow");

  std::vector<Vertex> vertices;
  for (const auto& v : h.vertices()) vertices.push_back(v);
  for (const auto& e : h.edges()) vertices.push_back({"<" + e.id + ">", 0.0});

  std::vector<Edge> arcs;
  std::vector<std::pair<int, int>> pins;
  std::vector<std::vector<std::string>> v_out(h.n()), v_in(h.n());
  std::vector<std::vector<std::string>> e_out(h.k()), e_in(h.k());
  for (int e = 0; e < h.k(); ++e) {
    const Hyperedge& he = h.edges()[e];
    for (int v : he.members) {
      const std::string base = he.id + ":" + h.vertices()[v].id;
      arcs.push_back({base + ">", v, h.n() + e});
      pins.emplace_back(static_cast<int>(arcs.size()) - 1, v);
      v_out[v].push_back(base + ">");
      e_in[e].push_back(base + ">");
      arcs.push_back({base + "<", h.n() + e, v});
      pins.emplace_back(static_cast<int>(arcs.size()) - 1, v);
      v_in[v].push_back(base + "<");
      e_out[e].push_back(base + "<");
    }
  }
  std::vector<std::optional<SubmodularFn>> cap_in(vertices.size()),
      cap_out(vertices.size());
  for (int v = 0; v < h.n(); ++v) {
    cap_out[v] = SubmodularFn::modular(
        v_out[v], std::vector<double>(v_out[v].size(), large));
    cap_in[v] = SubmodularFn::modular(
        v_in[v], std::vector<double>(v_in[v].size(), large));
  }
  for (int e = 0; e < h.k(); ++e) {
    cap_in[h.n() + e] = h.f_minus(e).renamed(e_in[e]);
    cap_out[h.n() + e] = h.f_plus(e).renamed(e_out[e]);
  }
  FactorGraph fg{PolyNetwork(std::move(vertices), std::move(arcs),
                             std::move(cap_in), std::move(cap_out)),
                 {}, {}, large};
  fg.structure.pinned_edges = std::move(pins);
  fg.structure.skip_vertex_objective.assign(fg.net.n(), 0);
  fg.structure.norm_vertices.assign(fg.net.n(), 0);
  fg.volume_weights.assign(fg.net.n(), 0.0);
  for (int v = 0; v < h.n(); ++v) fg.structure.skip_vertex_objective[v] = 1;
  for (int e = 0; e < h.k(); ++e) {
    fg.structure.norm_vertices[h.n() + e] = 1;
    fg.volume_weights[h.n() + e] = fg.net.degree(h.n() + e);
  }
  return fg;
}

std::vector<int> h_cut_to_factor_set(const PolyHypergraph& h,
                                     const std::vector<int>& s) {
  std::vector<char> in(h.n(), 0);
  for (int v : s) in[v] = 1;
  std::vector<int> t = s;
  for (int e = 0; e < h.k(); ++e) {
    const std::uint32_t inside = member_mask(h.edges()[e], in);
    const std::uint32_t full = h.f_plus(e).full_mask();
    if (inside == full) {
      t.push_back(h.n() + e);
    } else if (inside != 0) {
      // Boundary edge joins the side whose splitting cost it pays.
      if (h.f_plus(e).eval_mask(full & ~inside) <=
          h.f_minus(e).eval_mask(inside))
        t.push_back(h.n() + e);
    }
  }
  return t;
}

std::pair<std::vector<int>, std::vector<int>> factor_set_to_h(
    const PolyHypergraph& h, const std::vector<int>& t) {
  std::vector<int> vset, eset;
  std::vector<char> in(h.n(), 0);
  for (int i : t) {
    if (i < h.n()) {
      vset.push_back(i);
      in[i] = 1;
    } else {
      eset.push_back(i - h.n());
    }
  }
  // Drop edge vertices with no member on their side; keeps the set admissible
  // and never increases the conductance ratio.
  std::vector<int> kept;
  for (int e : eset) {
    if (member_mask(h.edges()[e], in) != 0) kept.push_back(e);
  }
  if (kept.empty() && !vset.empty()) {
    // The cut carried no usable edge vertices; rebuild the canonical edge
    // side for vset: fully interior edges, else its boundary edges.
    for (int e = 0; e < h.k(); ++e) {
      const std::uint32_t mask = member_mask(h.edges()[e], in);
      if (mask != 0 && mask == (1u << h.edges()[e].members.size()) - 1u)
        kept.push_back(e);
    }
    if (kept.empty()) {
      for (int e = 0; e < h.k(); ++e)
        if (member_mask(h.edges()[e], in) != 0) kept.push_back(e);
    }
  }
  return {vset, kept};
}

HSparsestResult h_sparsest_pipeline(const PolyHypergraph& h,
                                    const SdpOptions& opts) {
  const FactorGraph fg = factor_graph(h);
  const VectorSolution sol = solve_sdp_sparsity(fg.net, opts, fg.structure);
  const LineMapResult lm = arv_line_map(fg.net, sol);
  const CutResult cut = sweep_sparsity(fg.net, lm.x);

  HSparsestResult out;
  out.sdp_objective = sol.objective;
  out.factor_sparsity = fg.net.sparsity(cut.side);
  std::vector<int> s;
  for (int i : cut.side)
    if (i < h.n()) s.push_back(i);
  const std::vector<int> cs = complement_set(h.n(), s);
  double best = std::numeric_limits<double>::infinity();
  for (const std::vector<int>* cand :
       std::initializer_list<const std::vector<int>*>{&s, &cs}) {
    if (cand->empty() || static_cast<int>(cand->size()) == h.n()) continue;
    const double val = h.sparsity(*cand);
    if (val < best) {
      best = val;
      out.side = *cand;
    }
  }
  if (!std::isfinite(best))
    throw DegenerateCut("h_sparsest_pipeline: degenerate recovered cut");
  out.sparsity = best;
  assert(out.sparsity <= out.factor_sparsity + 1e-9);
  return out;
}

HConductanceResult h_conductance_pipeline(const PolyHypergraph& h,
                                          const SdpOptions& opts, int retries,
                                          unsigned seed) {
  const FactorGraph fg = factor_graph(h);
  const VectorSolution sol = solve_sdp_conductance(fg.net, opts, fg.structure);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, LineEmbedding>> cands;
  for (int t = 0; t < std::max(1, retries); ++t) {
    const LineEmbedding x = gaussian_project(fg.net, sol, rng, fg.volume_weights);
    try {
      const RayleighReport rr = rayleigh(fg.net, x, fg.volume_weights);
      cands.emplace_back(rr.r_sym, x);
    } catch (const DegenerateEmbedding&) {
      continue;
    }
  }
  if (cands.empty())
    throw DegenerateEmbedding("h_conductance_pipeline: degenerate projections");
  std::sort(cands.begin(), cands.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Round the candidates in quality order; a projection whose swept factor
  // cut maps to a zero- or full-volume hypergraph pair is skipped.
  for (const auto& [score, x] : cands) {
    CutResult cut;
    try {
      cut = cheeger_round_symmetric(fg.net, x, fg.volume_weights);
    } catch (const std::runtime_error&) {
      continue;
    }
    auto [vset, eset] = factor_set_to_h(h, cut.side);
    HConductanceResult out;
    out.sdp_objective = sol.objective;
    out.rayleigh_value = score;
    out.factor_value = cut.objective_value;
    out.vset = std::move(vset);
    out.eset = std::move(eset);
    try {
      out.sym_conductance = h.sym_conductance(out.vset, out.eset);
    } catch (const std::runtime_error&) {
      continue;
    }
    return out;
  }
  throw DegenerateCut("h_conductance_pipeline: no projection yields a proper pair");
}

double psi(const PolyHypergraph& h, const std::vector<double>& edge_weights,
           const std::vector<int>& t) {
  require(edge_weights.size() == static_cast<size_t>(h.k()),
          "psi: weight count mismatch");
  std::vector<char> in(h.n(), 0);
  for (int v : t) in[v] = 1;
  double cut = 0, touched = 0, co_touched = 0;
  for (int e = 0; e < h.k(); ++e) {
    bool any_in = false, any_out = false;
    for (int v : h.edges()[e].members) (in[v] ? any_in : any_out) = true;
    if (any_in && any_out) cut += edge_weights[e];
    if (any_in) touched += edge_weights[e];
    if (any_out) co_touched += edge_weights[e];
  }
  const double denom = std::min(touched, co_touched);
  if (denom <= 0) throw DegenerateCut("psi: one side touches no edge weight");
  return cut / denom;
}

PsiResult psi_pipeline(const PolyHypergraph& h,
                       const std::vector<double>& edge_weights,
                       const SdpOptions& opts, int retries, unsigned seed) {
  const HConductanceResult hc = h_conductance_pipeline(h, opts, retries, seed);
  PsiResult out;
  out.t = hc.vset;
  out.sym_conductance = hc.sym_conductance;
  out.psi_value = psi(h, edge_weights, out.t);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> balanced_admissible_set(
    const PolyHypergraph& h) {
  const double total = h.total_volume();
  require(total > 0, "balanced_admissible_set: zero volume");
  for (int e = 0; e < h.k(); ++e)
    require(h.edge_degree(e) <= total / 4 + 1e-12,
            "balanced_admissible_set: an edge holds over a quarter of the volume");
  std::vector<int> eset;
  std::vector<char> in_v(h.n(), 0);
  double vol = 0;
  for (int e = 0; e < h.k() && vol < total / 4; ++e) {
    eset.push_back(e);
    vol += h.edge_degree(e);
    for (int v : h.edges()[e].members) in_v[v] = 1;
  }
  std::vector<int> vset;
  for (int v = 0; v < h.n(); ++v)
    if (in_v[v]) vset.push_back(v);
  assert(vol >= total / 4 - 1e-12 && vol <= total / 2 + 1e-12);
  assert(h.sym_conductance(vset, eset) <= 4.0 + 1e-9);
  return {vset, eset};
}

PolyHypergraph vertex_expansion_reduce(
    const std::vector<Vertex>& vertices,
    const std::vector<std::vector<int>>& adjacency,
    std::vector<double>* edge_weights_out) {
  require(adjacency.size() == vertices.size(),
          "vertex_expansion_reduce: adjacency size mismatch");
  std::vector<Hyperedge> edges;
  std::vector<double> weights;
  for (size_t v = 0; v < vertices.size(); ++v) {
    Hyperedge e;
    e.id = "star:" + vertices[v].id;
    e.members.push_back(static_cast<int>(v));
    for (int u : adjacency[v])
      if (u != static_cast<int>(v)) e.members.push_back(u);
    edges.push_back(std::move(e));
    weights.push_back(vertices[v].weight);
  }
  if (edge_weights_out) *edge_weights_out = weights;
  return PolyHypergraph::uniform(vertices, std::move(edges), std::move(weights));
}

double sym_vertex_expansion(const std::vector<Vertex>& vertices,
                            const std::vector<std::vector<int>>& adjacency,
                            const std::vector<int>& s) {
  std::vector<char> in(vertices.size(), 0);
  for (int v : s) in[v] = 1;
  double ws = 0, wtot = 0, boundary = 0;
  for (size_t v = 0; v < vertices.size(); ++v) {
    wtot += vertices[v].weight;
    if (in[v]) ws += vertices[v].weight;
    bool crosses = false;
    for (int u : adjacency[v])
      if (in[u] != in[v]) crosses = true;
    if (crosses) boundary += vertices[v].weight;
  }
  const double denom = std::min(ws, wtot - ws);
  if (denom <= 0)
    throw DegenerateCut("sym_vertex_expansion: one side has zero weight");
  return boundary / denom;
}

}  // namespace polycut
