#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polycut/network.hpp"
#include "polycut/sweep.hpp"

namespace polycut {

struct SdpOptions {
  double tol = 1e-6;
  int max_iters = 20000;
  unsigned seed = 1;
  double penalty = 16.0;  // initial triangle penalty weight
  double step = 0.5;
};

struct SdpResiduals {
  double constraint = 0;  // spread (or normalization) deviation from 1
  double centering = 0;
  double max_triangle_violation = 0;
  double min_eigenvalue = 0;
};

// Gram-matrix solution over indices 0..n-1 (vertices), n..n+m-1 (edges),
// n+m (reference point).
struct VectorSolution {
  int n = 0, m = 0;
  std::vector<double> gram;  // dim() x dim(), row-major
  double objective = 0;
  bool converged = true;
  SdpResiduals residuals;

  int dim() const { return n + m + 1; }
  int ref() const { return n + m; }
  double dist2(int i, int j) const;   // squared distance
  double ddist(int i, int j) const;   // directed distance via the reference
  // Explicit vectors (dim() coordinates each) recovering the Gram matrix.
  std::vector<std::vector<double>> factor() const;
  nlohmann::json to_json() const;
  static VectorSolution from_json(const nlohmann::json& j);
};

// Optional structure for networks with hard (effectively infinite) capacities:
// such edges are pinned to a vertex's vector, the vertex's objective terms are
// dropped, and (for the conductance program) centering and normalization run
// over a vertex subset.
struct SdpStructure {
  std::vector<std::pair<int, int>> pinned_edges;  // (edge, vertex)
  std::vector<char> skip_vertex_objective;        // size n or empty
  std::vector<char> norm_vertices;                // size n or empty (= all)
};

double sdp_sparsity_objective(const PolyNetwork& net, const VectorSolution& sol,
                              const SdpStructure& structure = {});
double sdp_conductance_objective(const PolyNetwork& net,
                                 const VectorSolution& sol,
                                 const SdpStructure& structure = {});

VectorSolution solve_sdp_sparsity(const PolyNetwork& net,
                                  const SdpOptions& opts = {},
                                  const SdpStructure& structure = {});
VectorSolution solve_sdp_conductance(const PolyNetwork& net,
                                     const SdpOptions& opts = {},
                                     const SdpStructure& structure = {});

// Feasible two-valued solution of the sparsity program realizing a vertex cut:
// its objective equals the cut's sparsity exactly. The overload without an
// assignment picks the cheaper boundary and its optimal assignment.
VectorSolution embed_integral(const PolyNetwork& net, const std::vector<int>& s,
                              CutSide side, const std::map<int, int>& owner);
VectorSolution embed_integral(const PolyNetwork& net, const std::vector<int>& s);

}  // namespace polycut
