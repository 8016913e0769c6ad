#include "polycut/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polycut/errors.hpp"
#include "polycut/relax.hpp"

namespace polycut {

namespace {

double rayleigh_min(const PolyNetwork& net, const LineEmbedding& x) {
  try {
    return rayleigh(net, x).r;
  } catch (const DegenerateEmbedding&) {
    return std::numeric_limits<double>::infinity();
  }
}

// Golden-section minimization of a unimodal-ish slice; good enough as a line
// search inside coordinate descent.
template <typename F>
double golden_section(F f, double lo, double hi, int iters = 40) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

}  // namespace

LineEmbedding cut_to_embedding(const PolyNetwork& net, const std::vector<int>& s,
                               CutSide side, const std::map<int, int>& owner) {
  std::vector<char> in(net.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= net.n()) throw InputError("cut_to_embedding: bad vertex");
    in[v] = 1;
  }
  LineEmbedding x;
  x.vertex.resize(net.n());
  x.edge.resize(net.m());
  for (int v = 0; v < net.n(); ++v) x.vertex[v] = in[v] ? 1.0 : 0.0;
  for (int e = 0; e < net.m(); ++e) {
    const Edge& ed = net.edges()[e];
    if (in[ed.tail] == in[ed.head]) {
      x.edge[e] = x.vertex[ed.tail];
      continue;
    }
    const bool on_boundary =
        (side == CutSide::Plus) ? (in[ed.tail] && !in[ed.head])
                                : (!in[ed.tail] && in[ed.head]);
    if (!on_boundary) {
      // Reverse boundary edges sit at the cut side's level and charge nothing.
      x.edge[e] = 1.0;
      continue;
    }
    auto it = owner.find(e);
    if (it == owner.end())
      throw InputError("cut_to_embedding: missing assignment for boundary edge");
    const int s_end = (side == CutSide::Plus) ? ed.tail : ed.head;
    // Charged to the cut side: the edge takes the far level so the charged
    // endpoint pays the full difference; otherwise it takes the cut level.
    x.edge[e] = (it->second == s_end) ? 0.0 : 1.0;
  }
  return x;
}

LineEmbedding cut_to_embedding(const PolyNetwork& net,
                               const std::vector<int>& s) {
  const CutAssignment plus = net.cut_cost(net.boundary(s, CutSide::Plus));
  const CutAssignment minus = net.cut_cost(net.boundary(s, CutSide::Minus));
  return plus.value <= minus.value
             ? cut_to_embedding(net, s, CutSide::Plus, plus.owner)
             : cut_to_embedding(net, s, CutSide::Minus, minus.owner);
}

LineEmbedding center_embedding(const PolyNetwork& net, const LineEmbedding& x) {
  double dot = 0, vol = 0;
  for (int v = 0; v < net.n(); ++v) {
    dot += net.degree(v) * x.vertex[v];
    vol += net.degree(v);
  }
  if (vol <= 0) throw InputError("center_embedding: zero volume");
  const double c = dot / vol;
  LineEmbedding y = x;
  for (double& v : y.vertex) v -= c;
  for (double& e : y.edge) e -= c;
  return y;
}

GapEstimate estimate_gamma2(const PolyNetwork& net, int restarts, unsigned seed,
                            int max_passes) {
  if (net.n() < 2) throw InputError("estimate_gamma2: need two vertices");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<LineEmbedding> starts;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    LineEmbedding x;
    x.vertex.resize(net.n());
    x.edge.resize(net.m());
    for (double& c : x.vertex) c = gauss(rng);
    for (int e = 0; e < net.m(); ++e)
      x.edge[e] = 0.5 * (x.vertex[net.edges()[e].tail] +
                         x.vertex[net.edges()[e].head]);
    starts.push_back(center_embedding(net, x));
  }
  try {
    SdpOptions opts;
    opts.max_iters = 4000;
    opts.seed = seed;
    const VectorSolution sol = solve_sdp_conductance(net, opts);
    for (int r = 0; r < 2; ++r)
      starts.push_back(gaussian_project(net, sol, rng));
  } catch (const std::runtime_error&) {
    // relaxation starts are optional
  }
  // Indicator starts from the best start's threshold cuts.
  try {
    const CutResult sweep = cheeger_round_directed(net, starts.front());
    starts.push_back(center_embedding(net, cut_to_embedding(net, sweep.side)));
  } catch (const std::runtime_error&) {
  }

  GapEstimate best;
  best.upper = std::numeric_limits<double>::infinity();
  // The quotient is minimized over centered embeddings only, and it is not
  // shift-invariant, so every evaluation recenters first; this makes the
  // search objective shift-invariant while agreeing with the constrained one.
  auto objective = [&](const LineEmbedding& x) {
    return rayleigh_min(net, center_embedding(net, x));
  };
  for (LineEmbedding x : starts) {
    double cur = objective(x);
    if (!std::isfinite(cur)) continue;
    for (int pass = 0; pass < max_passes; ++pass) {
      const double before = cur;
      double span = 0;
      for (double c : x.vertex) span = std::max(span, std::abs(c));
      span = std::max(span, 1e-3);
      for (int v = 0; v < net.n(); ++v) {
        const double lo = x.vertex[v] - 1.5 * span;
        const double hi = x.vertex[v] + 1.5 * span;
        const double opt = golden_section(
            [&](double c) {
              x.vertex[v] = c;
              return objective(x);
            },
            lo, hi);
        x.vertex[v] = opt;
      }
      for (int e = 0; e < net.m(); ++e) {
        const double a = x.vertex[net.edges()[e].tail];
        const double b = x.vertex[net.edges()[e].head];
        const double opt = golden_section(
            [&](double c) {
              x.edge[e] = c;
              return objective(x);
            },
            std::min(a, b), std::max(a, b));
        x.edge[e] = opt;
      }
      cur = objective(x);
      if (before - cur < 1e-10 * (1.0 + std::abs(before))) break;
    }
    if (cur < best.upper) {
      best.upper = cur;
      best.certificate = center_embedding(net, x);
    }
  }
  if (!std::isfinite(best.upper))
    throw DegenerateEmbedding("estimate_gamma2: no usable start");
  best.cut = cheeger_round_directed(net, best.certificate);
  best.converged = true;
  return best;
}

}  // namespace polycut
