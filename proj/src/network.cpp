#include "polycut/network.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

PolyNetwork::PolyNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges,
                         std::vector<std::optional<SubmodularFn>> cap_in,
                         std::vector<std::optional<SubmodularFn>> cap_out)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = this->n();
  const int m = this->m();
  require(cap_in.size() == static_cast<size_t>(n) &&
              cap_out.size() == static_cast<size_t>(n),
          "network: capacity list size mismatch");
  for (int v = 0; v < n; ++v) {
    require(vertices_[v].weight >= 0, "network: negative vertex weight");
    require(vindex_.emplace(vertices_[v].id, v).second,
            "network: duplicate vertex id " + vertices_[v].id);
  }
  out_edges_.assign(n, {});
  in_edges_.assign(n, {});
  out_pos_.assign(m, -1);
  in_pos_.assign(m, -1);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edges_[e];
    require(ed.tail >= 0 && ed.tail < n && ed.head >= 0 && ed.head < n,
            "network: edge endpoint out of range");
    require(ed.tail != ed.head, "network: self-loop " + ed.id);
    require(eindex_.emplace(ed.id, e).second,
            "network: duplicate edge id " + ed.id);
    out_pos_[e] = static_cast<int>(out_edges_[ed.tail].size());
    out_edges_[ed.tail].push_back(e);
    in_pos_[e] = static_cast<int>(in_edges_[ed.head].size());
    in_edges_[ed.head].push_back(e);
  }
  cap_in_.reserve(n);
  cap_out_.reserve(n);
  auto check_ground = [&](const SubmodularFn& fn, const std::vector<int>& inc,
                          const char* what, const std::string& vid) {
    require(fn.size() == static_cast<int>(inc.size()),
            std::string("network: ") + what + " ground size mismatch at " + vid);
    for (size_t k = 0; k < inc.size(); ++k)
      require(fn.ground()[k] == edges_[inc[k]].id,
              std::string("network: ") + what + " ground order mismatch at " +
                  vid);
  };
  for (int v = 0; v < n; ++v) {
    auto unit = [&](const std::vector<int>& inc) {
      std::vector<std::string> g;
      for (int e : inc) g.push_back(edges_[e].id);
      return SubmodularFn::modular(g, std::vector<double>(inc.size(), 1.0));
    };
    if (cap_in[v]) {
      check_ground(*cap_in[v], in_edges_[v], "cap_in", vertices_[v].id);
      cap_in_.push_back(std::move(*cap_in[v]));
    } else {
      cap_in_.push_back(unit(in_edges_[v]));
    }
    if (cap_out[v]) {
      check_ground(*cap_out[v], out_edges_[v], "cap_out", vertices_[v].id);
      cap_out_.push_back(std::move(*cap_out[v]));
    } else {
      cap_out_.push_back(unit(out_edges_[v]));
    }
  }
  deg_.assign(n, 0.0);
  total_weight_ = 0;
  total_volume_ = 0;
  for (int v = 0; v < n; ++v) {
    deg_[v] = cap_out_[v].total() + cap_in_[v].total();
    total_weight_ += vertices_[v].weight;
    total_volume_ += deg_[v];
  }
}

int PolyNetwork::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  require(it != vindex_.end(), "network: unknown vertex " + id);
  return it->second;
}

int PolyNetwork::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  require(it != eindex_.end(), "network: unknown edge " + id);
  return it->second;
}

double PolyNetwork::volume(const std::vector<int>& s) const {
  double v = 0;
  for (int i : s) v += deg_[i];
  return v;
}

std::vector<int> complement_set(int n, const std::vector<int>& s) {
  std::vector<char> in(n, 0);
  for (int i : s) in[i] = 1;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

std::vector<int> PolyNetwork::boundary(const std::vector<int>& s,
                                       CutSide side) const {
  std::vector<char> in(n(), 0);
  for (int i : s) {
    require(i >= 0 && i < n(), "boundary: vertex index out of range");
    in[i] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < m(); ++e) {
    const bool t = in[edges_[e].tail], h = in[edges_[e].head];
    if (side == CutSide::Plus ? (t && !h) : (!t && h)) out.push_back(e);
  }
  return out;
}

CutAssignment PolyNetwork::cut_cost(const std::vector<int>& edge_set) const {
  // bit e' = 1 charges the edge to its head, 0 to its tail.
  std::vector<int> bit_of(m(), -1);
  for (size_t k = 0; k < edge_set.size(); ++k) {
    const int e = edge_set[k];
    require(e >= 0 && e < m(), "cut_cost: edge index out of range");
    require(bit_of[e] < 0, "cut_cost: duplicate edge in set");
    bit_of[e] = static_cast<int>(k);
  }
  std::vector<SfmTerm> terms;
  for (int v = 0; v < n(); ++v) {
    SfmTerm out_term{&cap_out_[v], {}};
    bool live = false;
    for (int e : out_edges_[v]) {
      SfmLit lit;
      if (bit_of[e] >= 0) {
        lit.bit = bit_of[e];
        lit.sense = false;  // charged to tail
        live = true;
      }
      out_term.lits.push_back(lit);
    }
    if (live) terms.push_back(std::move(out_term));
    SfmTerm in_term{&cap_in_[v], {}};
    live = false;
    for (int e : in_edges_[v]) {
      SfmLit lit;
      if (bit_of[e] >= 0) {
        lit.bit = bit_of[e];
        lit.sense = true;  // charged to head
        live = true;
      }
      in_term.lits.push_back(lit);
    }
    if (live) terms.push_back(std::move(in_term));
  }
  auto [assignment, value] = sfm_min(terms, static_cast<int>(edge_set.size()));
  CutAssignment result;
  result.value = value;
  for (size_t k = 0; k < edge_set.size(); ++k) {
    const int e = edge_set[k];
    result.owner[e] =
        ((assignment >> k) & 1u) ? edges_[e].head : edges_[e].tail;
  }
  return result;
}

double PolyNetwork::cutval(const std::vector<int>& s) const {
  return std::min(cut_cost(boundary(s, CutSide::Plus)).value,
                  cut_cost(boundary(s, CutSide::Minus)).value);
}

double PolyNetwork::symcutval(const std::vector<int>& s) const {
  return cut_cost(boundary(s, CutSide::Plus)).value +
         cut_cost(boundary(s, CutSide::Minus)).value;
}

double PolyNetwork::sparsity(const std::vector<int>& s) const {
  const double ws = [&] {
    double x = 0;
    for (int i : s) x += vertices_[i].weight;
    return x;
  }();
  const double denom = ws * (total_weight_ - ws);
  if (denom <= 0) throw DegenerateCut("sparsity: one side has zero weight");
  return cutval(s) / denom;
}

double PolyNetwork::conductance(const std::vector<int>& s) const {
  const double vs = volume(s);
  const double denom = std::min(vs, total_volume_ - vs);
  if (denom <= 0) throw DegenerateCut("conductance: one side has zero volume");
  return cutval(s) / denom;
}

double PolyNetwork::sym_conductance(const std::vector<int>& s) const {
  const double vs = volume(s);
  const double denom = std::min(vs, total_volume_ - vs);
  if (denom <= 0)
    throw DegenerateCut("sym_conductance: one side has zero volume");
  return symcutval(s) / denom;
}

PolyNetwork bidirect(std::vector<Vertex> vertices,
                     const std::vector<std::array<std::string, 3>>& und_edges,
                     const std::vector<std::optional<SubmodularFn>>& rho) {
  require(rho.size() == vertices.size(), "bidirect: rho list size mismatch");
  std::map<std::string, int> vidx;
  for (size_t v = 0; v < vertices.size(); ++v) vidx[vertices[v].id] = v;
  std::vector<Edge> arcs;
  std::vector<std::vector<std::string>> out_ids(vertices.size()),
      in_ids(vertices.size());
  std::vector<std::vector<size_t>> incident(vertices.size());
  for (size_t k = 0; k < und_edges.size(); ++k) {
    const auto& [id, a, b] = und_edges[k];
    require(vidx.count(a) && vidx.count(b), "bidirect: unknown endpoint");
    const int u = vidx[a], v = vidx[b];
    arcs.push_back({id + ">", u, v});
    arcs.push_back({id + "<", v, u});
    incident[u].push_back(k);
    incident[v].push_back(k);
  }
  // For each vertex and each incident undirected edge, the matching arc ids in
  // incidence order: outgoing arc for cap_out, incoming arc for cap_in.
  std::vector<std::optional<SubmodularFn>> cap_in(vertices.size()),
      cap_out(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (!rho[v]) continue;
    const SubmodularFn& f = *rho[v];
    require(f.size() == static_cast<int>(incident[v].size()),
            "bidirect: rho ground size mismatch at " + vertices[v].id);
    std::vector<std::string> out_ground, in_ground;
    for (int k = 0; k < f.size(); ++k) {
      const auto& ue = und_edges[incident[v][k]];
      require(f.ground()[k] == ue[0],
              "bidirect: rho ground order mismatch at " + vertices[v].id);
      const bool v_is_first = (ue[1] == vertices[v].id);
      out_ground.push_back(ue[0] + (v_is_first ? ">" : "<"));
      in_ground.push_back(ue[0] + (v_is_first ? "<" : ">"));
    }
    cap_out[v] = f.renamed(out_ground);
    cap_in[v] = f.renamed(in_ground);
  }
  // Arc incidence order within the PolyNetwork follows arc creation order,
  // which matches undirected incidence order per vertex, so the renamed
  // grounds line up with in_edges/out_edges.
  return PolyNetwork(std::move(vertices), std::move(arcs), std::move(cap_in),
                     std::move(cap_out));
}

PolyNetwork PolyNetwork::from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("vertices") && j.contains("edges"),
          "network: need vertices and edges");
  std::vector<Vertex> vertices;
  for (const auto& vj : j.at("vertices")) {
    Vertex v;
    v.id = vj.at("id").get<std::string>();
    v.weight = vj.value("weight", 1.0);
    vertices.push_back(std::move(v));
  }
  std::map<std::string, int> vidx;
  for (size_t k = 0; k < vertices.size(); ++k) vidx[vertices[k].id] = k;
  const nlohmann::json caps =
      j.contains("capacities") ? j.at("capacities") : nlohmann::json::object();
  const bool undirected = [&] {
    for (const auto& [vid, c] : caps.items()) {
      (void)vid;
      if (c.contains("rho")) return true;
    }
    return false;
  }();
  if (undirected) {
    std::vector<std::array<std::string, 3>> und_edges;
    for (const auto& ej : j.at("edges")) {
      und_edges.push_back({ej.at("id").get<std::string>(),
                           ej.at("tail").get<std::string>(),
                           ej.at("head").get<std::string>()});
    }
    std::vector<std::optional<SubmodularFn>> rho(vertices.size());
    for (const auto& [vid, c] : caps.items()) {
      require(vidx.count(vid), "network: capacity for unknown vertex " + vid);
      require(c.contains("rho"), "network: mixed directed/undirected capacities");
      rho[vidx[vid]] = SubmodularFn::from_json(c.at("rho"));
    }
    return bidirect(std::move(vertices), und_edges, rho);
  }
  std::vector<Edge> edges;
  for (const auto& ej : j.at("edges")) {
    Edge e;
    e.id = ej.at("id").get<std::string>();
    const std::string t = ej.at("tail").get<std::string>();
    const std::string h = ej.at("head").get<std::string>();
    require(vidx.count(t) && vidx.count(h), "network: unknown endpoint in " + e.id);
    e.tail = vidx[t];
    e.head = vidx[h];
    edges.push_back(std::move(e));
  }
  std::vector<std::optional<SubmodularFn>> cap_in(vertices.size()),
      cap_out(vertices.size());
  for (const auto& [vid, c] : caps.items()) {
    require(vidx.count(vid), "network: capacity for unknown vertex " + vid);
    if (c.contains("in")) cap_in[vidx[vid]] = SubmodularFn::from_json(c.at("in"));
    if (c.contains("out"))
      cap_out[vidx[vid]] = SubmodularFn::from_json(c.at("out"));
  }
  return PolyNetwork(std::move(vertices), std::move(edges), std::move(cap_in),
                     std::move(cap_out));
}

nlohmann::json PolyNetwork::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices_)
    j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_)
    j["edges"].push_back({{"id", e.id},
                          {"tail", vertices_[e.tail].id},
                          {"head", vertices_[e.head].id}});
  nlohmann::json caps = nlohmann::json::object();
  for (int v = 0; v < n(); ++v) {
    caps[vertices_[v].id] = {{"in", cap_in_[v].to_json()},
                             {"out", cap_out_[v].to_json()}};
  }
  j["capacities"] = std::move(caps);
  return j;
}

}  // namespace polycut
