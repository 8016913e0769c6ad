#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polycut/network.hpp"

namespace polycut {

// Coordinates on V (vertex[i] for vertex index i) and E (edge[e]).
struct LineEmbedding {
  std::vector<double> vertex;
  std::vector<double> edge;
};

enum class Objective { Sparsity, Conductance, SymmetricConductance };

struct CutResult {
  std::vector<int> side;              // vertex indices of S
  std::map<int, int> assignment;      // boundary edge -> charged endpoint
  double cut_value = 0;               // cost of the certified assignment
  Objective objective_kind = Objective::Conductance;
  double objective_value = 0;
  double guarantee = 0;               // bound the result is certified against
  double threshold = 0;
};

// Clamps each edge coordinate into [min, max] of its endpoints, shifts the
// minimum coordinate to 0 and rescales the maximum to 1.
LineEmbedding clamp_and_scale(const PolyNetwork& net, const LineEmbedding& x);

struct DirectedSweepResult {
  CutResult plus;    // ratio cut(delta_out(S), g_out) / w(S)
  CutResult minus;   // ratio cut(delta_in(S), g_in) / w(S)
  double bound_plus = 0;   // one-sided extension numerator / <w, x_V>
  double bound_minus = 0;
};

// Threshold sweep over x >= 0. Weights default to vertex weights; pass the
// degree vector for conductance-style ratios. Each side's ratio is certified
// against its one-sided extension bound.
DirectedSweepResult sweep_directed(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights = std::nullopt);

// Sparsity sweep; coordinates may be any finite reals (translated internally).
// The winning side's ratio is certified against its extension bound over the
// pairwise spread sum_{i<j} w_i w_j |x_i - x_j|.
CutResult sweep_sparsity(const PolyNetwork& net, const LineEmbedding& x);

// Symmetric sweep over x >= 0 with a joint assignment on both boundaries;
// ratio (cut(delta_out(S),g) + cut(delta_in(S),g)) / vol(S), certified against
// twice the full-extension bound.
CutResult sweep_symmetric(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights = std::nullopt);

}  // namespace polycut
