#pragma once

#include <map>
#include <vector>

#include "polycut/network.hpp"
#include "polycut/rounding.hpp"
#include "polycut/sweep.hpp"

namespace polycut {

// Indicator embedding of a cut with a boundary assignment: its minimum
// Rayleigh quotient equals the cut's one-sided conductance exactly when the
// assignment is optimal on the cheaper boundary.
LineEmbedding cut_to_embedding(const PolyNetwork& net, const std::vector<int>& s,
                               CutSide side, const std::map<int, int>& owner);
LineEmbedding cut_to_embedding(const PolyNetwork& net,
                               const std::vector<int>& s);

// Subtracts the degree-weighted vertex mean from every coordinate.
LineEmbedding center_embedding(const PolyNetwork& net, const LineEmbedding& x);

struct GapEstimate {
  double upper = 0;            // best Rayleigh quotient found
  LineEmbedding certificate;   // centered embedding attaining it
  CutResult cut;               // rounded from the certificate
  bool converged = true;
};

// Upper estimate of the spectral gap (the infimum of the Rayleigh quotient
// over degree-centered embeddings) by golden-section coordinate descent from
// several starts: random embeddings, projections of the conductance
// relaxation, and threshold cuts re-embedded as indicators.
GapEstimate estimate_gamma2(const PolyNetwork& net, int restarts = 4,
                            unsigned seed = 1, int max_passes = 60);

}  // namespace polycut
