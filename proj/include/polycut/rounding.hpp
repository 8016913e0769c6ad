#pragma once

#include <optional>
#include <random>
#include <vector>

#include "polycut/network.hpp"
#include "polycut/relax.hpp"
#include "polycut/sweep.hpp"

namespace polycut {

// Rayleigh quotients of a line embedding: one-sided extension numerators over
// the weighted squared vertex mass (weights default to degrees).
struct RayleighReport {
  double num_plus = 0;
  double num_minus = 0;
  double denom = 0;
  double r_plus = 0;
  double r_minus = 0;
  double r = 0;      // min(r_plus, r_minus)
  double r_sym = 0;  // r_plus + r_minus
};

RayleighReport rayleigh(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights = std::nullopt);

// Median shift and sign split. The shift centers the weighted median at zero,
// so both supports carry at most half the total weight; z is whichever signed
// part the caller's mode prefers.
struct ShiftSplit {
  LineEmbedding shifted;
  LineEmbedding z;          // nonnegative
  bool from_negative = false;
  double median = 0;
};

enum class SplitMode { Plus, Symmetric };

ShiftSplit shift_split(
    const PolyNetwork& net, const LineEmbedding& x, SplitMode mode,
    const std::optional<std::vector<double>>& weights = std::nullopt);

// Rounds a centered embedding to a cut with conductance at most
// 32 sqrt(min Rayleigh quotient); the bound is a hard postcondition.
CutResult cheeger_round_directed(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights = std::nullopt);

// Symmetric variant: symmetric conductance at most 128 sqrt(r_plus + r_minus).
CutResult cheeger_round_symmetric(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights = std::nullopt);

// Random line projection of a vector solution, recentered exactly against the
// given weights.
LineEmbedding gaussian_project(
    const PolyNetwork& net, const VectorSolution& sol, std::mt19937_64& rng,
    const std::optional<std::vector<double>>& weights = std::nullopt);

// Pivot ensemble line map: candidates are directed distances to or from each
// vertex pivot or the reference, either sign; every candidate satisfies
// max{0, x_i - x_j} <= ddist(i, j), and the one with the largest weighted
// pairwise vertex spread wins.
struct LineMapResult {
  LineEmbedding x;
  double spread = 0;      // weighted pairwise vertex spread of x
  double distortion = 0;  // squared-distance spread over line spread
  int pivot = -1;         // index into V, or ref()
  bool negated = false;
};

LineMapResult arv_line_map(const PolyNetwork& net, const VectorSolution& sol);

struct PipelineResult {
  CutResult cut;
  double sdp_objective = 0;
  double rayleigh_value = 0;  // of the embedding that produced the cut
  int retries_used = 0;
  VectorSolution solution;
  LineEmbedding embedding;
};

PipelineResult sparsest_cut_pipeline(const PolyNetwork& net,
                                     const SdpOptions& opts = {});

// Solves the conductance program, takes the best of `retries` random
// projections by Rayleigh quotient, and rounds it. symmetric selects the
// two-sided objective.
PipelineResult conductance_pipeline(const PolyNetwork& net,
                                    const SdpOptions& opts = {},
                                    int retries = 32, unsigned seed = 1,
                                    bool symmetric = true);

}  // namespace polycut
