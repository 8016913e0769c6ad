#include "polycut/rounding.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

constexpr double kTol = 1e-9;

std::vector<double> weights_or_degrees(
    const PolyNetwork& net, const std::optional<std::vector<double>>& weights) {
  if (weights) {
    if (static_cast<int>(weights->size()) != net.n())
      throw InputError("rounding: weight vector size mismatch");
    return *weights;
  }
  std::vector<double> w(net.n());
  for (int v = 0; v < net.n(); ++v) w[v] = net.degree(v);
  return w;
}

LineEmbedding negated(const LineEmbedding& x) {
  LineEmbedding y = x;
  for (double& c : y.vertex) c = -c;
  for (double& c : y.edge) c = -c;
  return y;
}

LineEmbedding squared(const LineEmbedding& x) {
  LineEmbedding y = x;
  for (double& c : y.vertex) c *= c;
  for (double& c : y.edge) c *= c;
  return y;
}

void check_centered(const PolyNetwork& net, const LineEmbedding& x,
                    const std::vector<double>& w) {
  double dot = 0, scale = 0;
  for (int v = 0; v < net.n(); ++v) {
    dot += w[v] * x.vertex[v];
    scale += w[v] * std::abs(x.vertex[v]);
  }
  if (std::abs(dot) > 1e-7 * std::max(1.0, scale))
    throw CenteringError("rounding: embedding not centered against weights");
}

}  // namespace

RayleighReport rayleigh(const PolyNetwork& net, const LineEmbedding& x,
                        const std::optional<std::vector<double>>& weights) {
  if (static_cast<int>(x.vertex.size()) != net.n() ||
      static_cast<int>(x.edge.size()) != net.m())
    throw InputError("rayleigh: embedding size mismatch");
  const std::vector<double> w = weights_or_degrees(net, weights);
  RayleighReport rep;
  for (int v = 0; v < net.n(); ++v) {
    std::vector<double> right_out, left_out, right_in, left_in;
    for (int e : net.out_edges(v)) {
      const double d = x.vertex[v] - x.edge[e];
      const double r = std::max(0.0, d), l = std::max(0.0, -d);
      right_out.push_back(r * r);
      left_out.push_back(l * l);
    }
    for (int e : net.in_edges(v)) {
      const double d = x.edge[e] - x.vertex[v];
      const double r = std::max(0.0, d), l = std::max(0.0, -d);
      right_in.push_back(r * r);
      left_in.push_back(l * l);
    }
    rep.num_plus +=
        net.cap_out(v).lovasz(right_out) + net.cap_in(v).lovasz(right_in);
    rep.num_minus +=
        net.cap_out(v).lovasz(left_out) + net.cap_in(v).lovasz(left_in);
    rep.denom += w[v] * x.vertex[v] * x.vertex[v];
  }
  if (rep.denom <= 0)
    throw DegenerateEmbedding("rayleigh: zero weighted vertex mass");
  rep.r_plus = rep.num_plus / rep.denom;
  rep.r_minus = rep.num_minus / rep.denom;
  rep.r = std::min(rep.r_plus, rep.r_minus);
  rep.r_sym = rep.r_plus + rep.r_minus;
  return rep;
}

ShiftSplit shift_split(const PolyNetwork& net, const LineEmbedding& x,
                       SplitMode mode,
                       const std::optional<std::vector<double>>& weights) {
  const std::vector<double> w = weights_or_degrees(net, weights);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (total <= 0) throw InputError("shift_split: zero total weight");

  // Weighted median of the vertex coordinates: both open half-lines carry at
  // most half the weight.
  std::vector<int> order(net.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return x.vertex[a] < x.vertex[b]; });
  double median = x.vertex[order.back()];
  double below = 0;
  for (size_t k = 0; k < order.size();) {
    const double val = x.vertex[order[k]];
    double at = 0;
    size_t k2 = k;
    while (k2 < order.size() && x.vertex[order[k2]] == val) at += w[order[k2++]];
    const double above = total - below - at;
    if (below <= total / 2 && above <= total / 2) {
      median = val;
      break;
    }
    below += at;
    k = k2;
  }

  ShiftSplit out;
  out.median = median;
  out.shifted = x;
  for (double& c : out.shifted.vertex) c -= median;
  for (double& c : out.shifted.edge) c -= median;
  LineEmbedding plus = out.shifted, minus = out.shifted;
  for (double& c : plus.vertex) c = std::max(0.0, c);
  for (double& c : plus.edge) c = std::max(0.0, c);
  for (double& c : minus.vertex) c = std::max(0.0, -c);
  for (double& c : minus.edge) c = std::max(0.0, -c);

  auto score = [&](const LineEmbedding& z, bool neg) {
    try {
      const RayleighReport r = rayleigh(net, z, w);
      if (mode == SplitMode::Symmetric) return r.r_sym;
      // The plus mode compares the plus quotient of y+ with the plus quotient
      // of -(y-), which equals the minus quotient of y-.
      return neg ? r.r_minus : r.r_plus;
    } catch (const DegenerateEmbedding&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const double sp = score(plus, false), sm = score(minus, true);
  if (!std::isfinite(sp) && !std::isfinite(sm))
    throw DegenerateEmbedding("shift_split: both signed parts vanish");
  out.from_negative = sm < sp;
  out.z = out.from_negative ? std::move(minus) : std::move(plus);
  return out;
}

CutResult cheeger_round_directed(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights) {
  const std::vector<double> w = weights_or_degrees(net, weights);
  check_centered(net, x, w);
  const RayleighReport rr = rayleigh(net, x, w);
  const bool plus_branch = rr.r_plus <= rr.r_minus;
  const LineEmbedding base = plus_branch ? x : negated(x);
  const ShiftSplit ss = shift_split(net, base, SplitMode::Plus, w);
  const DirectedSweepResult sweep = sweep_directed(net, squared(ss.z), w);
  CutResult r = ss.from_negative ? sweep.minus : sweep.plus;

  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  double ws = 0;
  for (int v : r.side) ws += w[v];
  const double denom = std::min(ws, total - ws);
  if (denom <= 0) throw DegenerateCut("cheeger_round: unbalanced sweep cut");
  r.objective_kind = Objective::Conductance;
  r.objective_value = net.cutval(r.side) / denom;
  r.guarantee = 32.0 * std::sqrt(rr.r);
  assert(r.objective_value <= r.guarantee + kTol);
  return r;
}

CutResult cheeger_round_symmetric(
    const PolyNetwork& net, const LineEmbedding& x,
    const std::optional<std::vector<double>>& weights) {
  const std::vector<double> w = weights_or_degrees(net, weights);
  check_centered(net, x, w);
  const RayleighReport rr = rayleigh(net, x, w);
  const ShiftSplit ss = shift_split(net, x, SplitMode::Symmetric, w);
  CutResult r = sweep_symmetric(net, squared(ss.z), w);

  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  double ws = 0;
  for (int v : r.side) ws += w[v];
  const double denom = std::min(ws, total - ws);
  if (denom <= 0) throw DegenerateCut("cheeger_round: unbalanced sweep cut");
  r.objective_kind = Objective::SymmetricConductance;
  r.objective_value = net.symcutval(r.side) / denom;
  r.guarantee = 128.0 * std::sqrt(rr.r_sym);
  assert(r.objective_value <= r.guarantee + kTol);
  return r;
}

LineEmbedding gaussian_project(
    const PolyNetwork& net, const VectorSolution& sol, std::mt19937_64& rng,
    const std::optional<std::vector<double>>& weights) {
  if (sol.n != net.n() || sol.m != net.m())
    throw InputError("gaussian_project: solution size mismatch");
  const std::vector<double> w = weights_or_degrees(net, weights);
  const std::vector<std::vector<double>> vecs = sol.factor();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> g(sol.dim());
  for (double& c : g) c = gauss(rng);
  LineEmbedding x;
  x.vertex.resize(net.n());
  x.edge.resize(net.m());
  auto proj = [&](int idx) {
    double s = 0;
    for (int k = 0; k < sol.dim(); ++k) s += vecs[idx][k] * g[k];
    return s;
  };
  for (int v = 0; v < net.n(); ++v) x.vertex[v] = proj(v);
  for (int e = 0; e < net.m(); ++e) x.edge[e] = proj(net.n() + e);
  // The solver's centering constraint makes the weighted mean vanish up to
  // numerical residue; remove that residue exactly.
  double dot = 0, total = 0;
  for (int v = 0; v < net.n(); ++v) {
    dot += w[v] * x.vertex[v];
    total += w[v];
  }
  if (total > 0) {
    const double c = dot / total;
    for (double& v : x.vertex) v -= c;
    for (double& e : x.edge) e -= c;
  }
  return x;
}

LineMapResult arv_line_map(const PolyNetwork& net, const VectorSolution& sol) {
  if (sol.n != net.n() || sol.m != net.m())
    throw InputError("arv_line_map: solution size mismatch");
  const int total = net.n() + net.m();
  const double viol_tol =
      std::max(1e-9, 10.0 * sol.residuals.max_triangle_violation);

  LineMapResult best;
  best.spread = -1;
  std::vector<int> pivots;
  for (int v = 0; v < net.n(); ++v) pivots.push_back(v);
  pivots.push_back(sol.ref());
  for (int p : pivots) {
    for (int sign = 0; sign < 2; ++sign) {
      std::vector<double> chi(total);
      for (int i = 0; i < total; ++i)
        chi[i] = sign ? -sol.ddist(p, i) : sol.ddist(i, p);
      // One-sided Lipschitz property against the directed distance.
      bool ok = true;
      for (int i = 0; i < total && ok; ++i)
        for (int j = 0; j < total && ok; ++j) {
          if (i == j) continue;
          if (std::max(0.0, chi[i] - chi[j]) > sol.ddist(i, j) + viol_tol)
            ok = false;
        }
      if (!ok) continue;
      double spread = 0;
      for (int i = 0; i < net.n(); ++i)
        for (int j = i + 1; j < net.n(); ++j)
          spread += net.weight(i) * net.weight(j) * std::abs(chi[i] - chi[j]);
      if (spread > best.spread) {
        best.spread = spread;
        best.pivot = p;
        best.negated = sign == 1;
        best.x.vertex.assign(chi.begin(), chi.begin() + net.n());
        best.x.edge.assign(chi.begin() + net.n(), chi.end());
      }
    }
  }
  if (best.spread <= 0)
    throw DegenerateEmbedding("arv_line_map: no candidate with positive spread");
  double sq_spread = 0;
  for (int i = 0; i < net.n(); ++i)
    for (int j = i + 1; j < net.n(); ++j)
      sq_spread += net.weight(i) * net.weight(j) * sol.dist2(i, j);
  best.distortion = sq_spread / best.spread;
  return best;
}

PipelineResult sparsest_cut_pipeline(const PolyNetwork& net,
                                     const SdpOptions& opts) {
  PipelineResult out;
  out.solution = solve_sdp_sparsity(net, opts);
  out.sdp_objective = out.solution.objective;
  const LineMapResult lm = arv_line_map(net, out.solution);
  out.embedding = lm.x;
  out.cut = sweep_sparsity(net, lm.x);
  out.cut.objective_value = net.sparsity(out.cut.side);
  out.rayleigh_value = 0;
  return out;
}

PipelineResult conductance_pipeline(const PolyNetwork& net,
                                    const SdpOptions& opts, int retries,
                                    unsigned seed, bool symmetric) {
  PipelineResult out;
  out.solution = solve_sdp_conductance(net, opts);
  out.sdp_objective = out.solution.objective;
  std::mt19937_64 rng(seed);
  double best_score = std::numeric_limits<double>::infinity();
  LineEmbedding best_x;
  for (int t = 0; t < std::max(1, retries); ++t) {
    const LineEmbedding x = gaussian_project(net, out.solution, rng);
    try {
      const RayleighReport rr = rayleigh(net, x);
      const double score = symmetric ? rr.r_sym : rr.r;
      if (score < best_score) {
        best_score = score;
        best_x = x;
      }
      ++out.retries_used;
    } catch (const DegenerateEmbedding&) {
      continue;
    }
  }
  if (!std::isfinite(best_score))
    throw DegenerateEmbedding("conductance_pipeline: all projections degenerate");
  out.embedding = best_x;
  out.rayleigh_value = best_score;
  out.cut = symmetric ? cheeger_round_symmetric(net, best_x)
                      : cheeger_round_directed(net, best_x);
  return out;
}

}  // namespace polycut
