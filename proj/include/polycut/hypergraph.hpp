#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polycut/network.hpp"
#include "polycut/relax.hpp"
#include "polycut/rounding.hpp"

namespace polycut {

struct Hyperedge {
  std::string id;
  std::vector<int> members;  // vertex indices
};

// Hypergraph with a pair of monotone submodular splitting functions per edge,
// both defined over the edge's member ids in member order.
class PolyHypergraph {
 public:
  PolyHypergraph(std::vector<Vertex> vertices, std::vector<Hyperedge> edges,
                 std::vector<SubmodularFn> f_plus,
                 std::vector<SubmodularFn> f_minus);

  // Uniform splitting functions: f_plus = f_minus = w_e on any nonempty set.
  static PolyHypergraph uniform(std::vector<Vertex> vertices,
                                std::vector<Hyperedge> edges,
                                std::vector<double> edge_weights);

  int n() const { return static_cast<int>(vertices_.size()); }
  int k() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const SubmodularFn& f_plus(int e) const { return f_plus_[e]; }
  const SubmodularFn& f_minus(int e) const { return f_minus_[e]; }
  double edge_degree(int e) const { return deg_[e]; }
  double total_volume() const { return total_volume_; }
  double total_weight() const { return total_weight_; }

  double cutval(const std::vector<int>& s) const;
  double sparsity(const std::vector<int>& s) const;
  // Symmetric conductance of an admissible set (vset, eset); the denominator
  // is the smaller of the two edge volumes.
  double sym_conductance(const std::vector<int>& vset,
                         const std::vector<int>& eset) const;
  double sym_cut(const std::vector<int>& vset,
                 const std::vector<int>& eset) const;
  bool admissible(const std::vector<int>& vset,
                  const std::vector<int>& eset) const;

  static PolyHypergraph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Hyperedge> edges_;
  std::vector<SubmodularFn> f_plus_, f_minus_;
  std::vector<double> deg_;
  double total_volume_ = 0, total_weight_ = 0;
};

// Equivalent directed network: vertex indices 0..n-1 mirror the hypergraph
// vertices (original weights), n..n+k-1 mirror the hyperedges (weight zero);
// every member gets an antiparallel arc pair to its edge vertex. Vertex-side
// capacities are hard: the returned SdpStructure pins each arc's relaxation
// variable to its original-vertex endpoint, drops those objective terms, and
// normalizes over the edge vertices.
struct FactorGraph {
  PolyNetwork net;
  SdpStructure structure;
  std::vector<double> volume_weights;  // edge-vertex degrees, zero elsewhere
  double large = 0;                    // the hard capacity actually used
};

FactorGraph factor_graph(const PolyHypergraph& h);

// Cut transfer: given S in the hypergraph, a factor-graph vertex set with
// the same plus-boundary cut cost and the same weight.
std::vector<int> h_cut_to_factor_set(const PolyHypergraph& h,
                                     const std::vector<int>& s);

// Cleanup of a factor-graph set into an admissible hypergraph pair; never
// increases the symmetric conductance.
std::pair<std::vector<int>, std::vector<int>> factor_set_to_h(
    const PolyHypergraph& h, const std::vector<int>& t);

struct HSparsestResult {
  std::vector<int> side;
  double sparsity = 0;
  double factor_sparsity = 0;  // of the factor-graph cut it came from
  double sdp_objective = 0;
};

HSparsestResult h_sparsest_pipeline(const PolyHypergraph& h,
                                    const SdpOptions& opts = {});

struct HConductanceResult {
  std::vector<int> vset, eset;
  double sym_conductance = 0;
  double factor_value = 0;
  double sdp_objective = 0;
  double rayleigh_value = 0;
};

HConductanceResult h_conductance_pipeline(const PolyHypergraph& h,
                                          const SdpOptions& opts = {},
                                          int retries = 32, unsigned seed = 1);

// Weighted all-or-nothing expansion psi of a vertex set T: cut weight over the
// smaller touched-edge weight.
double psi(const PolyHypergraph& h, const std::vector<double>& edge_weights,
           const std::vector<int>& t);

struct PsiResult {
  std::vector<int> t;
  double psi_value = 0;
  double sym_conductance = 0;  // of the admissible set it was derived from
};

PsiResult psi_pipeline(const PolyHypergraph& h,
                       const std::vector<double>& edge_weights,
                       const SdpOptions& opts = {}, int retries = 32,
                       unsigned seed = 1);

// Balanced admissible set with symmetric conductance at most 4, by greedy
// volume accumulation; requires every edge degree at most a quarter of the
// total volume.
std::pair<std::vector<int>, std::vector<int>> balanced_admissible_set(
    const PolyHypergraph& h);

// Star hypergraph of an undirected graph: one edge {v} + N(v) per vertex with
// weight w_v. adjacency[v] lists neighbors.
PolyHypergraph vertex_expansion_reduce(
    const std::vector<Vertex>& vertices,
    const std::vector<std::vector<int>>& adjacency,
    std::vector<double>* edge_weights_out);

// Symmetric vertex expansion of S: weight of vertices with an edge crossing S,
// over the smaller side weight.
double sym_vertex_expansion(const std::vector<Vertex>& vertices,
                            const std::vector<std::vector<int>>& adjacency,
                            const std::vector<int>& s);

}  // namespace polycut
