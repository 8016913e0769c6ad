#include "polycut/sweep.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

constexpr double kTol = 1e-9;

void check_finite(const PolyNetwork& net, const LineEmbedding& x) {
  if (static_cast<int>(x.vertex.size()) != net.n() ||
      static_cast<int>(x.edge.size()) != net.m())
    throw InputError("embedding: size mismatch with network");
  for (double c : x.vertex)
    if (!std::isfinite(c)) throw InputError("embedding: non-finite coordinate");
  for (double c : x.edge)
    if (!std::isfinite(c)) throw InputError("embedding: non-finite coordinate");
}

LineEmbedding clamp_edges(const PolyNetwork& net, LineEmbedding x) {
  for (int e = 0; e < net.m(); ++e) {
    const double a = x.vertex[net.edges()[e].tail];
    const double b = x.vertex[net.edges()[e].head];
    x.edge[e] = std::clamp(x.edge[e], std::min(a, b), std::max(a, b));
  }
  return x;
}

double max_coord(const LineEmbedding& x) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double c : x.vertex) mx = std::max(mx, c);
  for (double c : x.edge) mx = std::max(mx, c);
  return mx;
}

double min_coord(const LineEmbedding& x) {
  double mn = std::numeric_limits<double>::infinity();
  for (double c : x.vertex) mn = std::min(mn, c);
  for (double c : x.edge) mn = std::min(mn, c);
  return mn;
}

void scale_by(LineEmbedding& x, double s) {
  for (double& c : x.vertex) c *= s;
  for (double& c : x.edge) c *= s;
}

// Normalizes nonnegative coordinates to [0, 1] without translating, so zero
// stays zero; clamps edges into their endpoint range first.
LineEmbedding normalize_nonneg(const PolyNetwork& net, const LineEmbedding& x0) {
  check_finite(net, x0);
  for (double c : x0.vertex)
    if (c < 0) throw InputError("sweep: negative coordinate");
  LineEmbedding x = clamp_edges(net, x0);
  const double mx = max_coord(x);
  if (mx <= 0) throw DegenerateEmbedding("sweep: all coordinates zero");
  scale_by(x, 1.0 / mx);
  return x;
}

std::vector<double> thresholds_of(const LineEmbedding& x) {
  std::vector<double> t;
  t.push_back(0.0);
  t.insert(t.end(), x.vertex.begin(), x.vertex.end());
  t.insert(t.end(), x.edge.begin(), x.edge.end());
  std::sort(t.begin(), t.end(), std::greater<>());
  t.erase(std::unique(t.begin(), t.end()), t.end());  // descending, distinct
  return t;
}

// Cost of the explicit threshold assignment on one boundary of S_t. Boundary
// edges with coordinate <= t are charged to their S-side endpoint, the rest
// to the other endpoint (for side Plus: tail vs head; mirrored for Minus).
double side_cost(const PolyNetwork& net, const std::vector<char>& in_s,
                 const LineEmbedding& x, double t, CutSide side,
                 std::map<int, int>* owner_out) {
  std::vector<std::uint32_t> own_out(net.n(), 0), own_in(net.n(), 0);
  for (int e = 0; e < net.m(); ++e) {
    const Edge& ed = net.edges()[e];
    const bool cut = (side == CutSide::Plus)
                         ? (in_s[ed.tail] && !in_s[ed.head])
                         : (!in_s[ed.tail] && in_s[ed.head]);
    if (!cut) continue;
    const int s_end = (side == CutSide::Plus) ? ed.tail : ed.head;
    const int o_end = (side == CutSide::Plus) ? ed.head : ed.tail;
    const int owner = (x.edge[e] <= t) ? s_end : o_end;
    if (owner_out) (*owner_out)[e] = owner;
    if (owner == ed.tail) {
      int pos = 0;
      for (int oe : net.out_edges(ed.tail)) {
        if (oe == e) break;
        ++pos;
      }
      own_out[ed.tail] |= 1u << pos;
    } else {
      int pos = 0;
      for (int ie : net.in_edges(ed.head)) {
        if (ie == e) break;
        ++pos;
      }
      own_in[ed.head] |= 1u << pos;
    }
  }
  double cost = 0;
  for (int v = 0; v < net.n(); ++v) {
    if (own_out[v]) cost += net.cap_out(v).eval_mask(own_out[v]);
    if (own_in[v]) cost += net.cap_in(v).eval_mask(own_in[v]);
  }
  return cost;
}

// One-sided extension numerator: sum over vertices of the Lovasz extensions of
// the clipped coordinate differences toward outgoing and incoming edges.
double extension_numerator(const PolyNetwork& net, const LineEmbedding& x,
                           bool plus_side) {
  double total = 0;
  for (int v = 0; v < net.n(); ++v) {
    std::vector<double> d_out, d_in;
    for (int e : net.out_edges(v)) {
      const double d = x.vertex[v] - x.edge[e];
      d_out.push_back(plus_side ? std::max(0.0, d) : std::max(0.0, -d));
    }
    for (int e : net.in_edges(v)) {
      const double d = x.edge[e] - x.vertex[v];
      d_in.push_back(plus_side ? std::max(0.0, d) : std::max(0.0, -d));
    }
    total += net.cap_out(v).lovasz(d_out) + net.cap_in(v).lovasz(d_in);
  }
  return total;
}

double abs_extension_numerator(const PolyNetwork& net, const LineEmbedding& x) {
  double total = 0;
  for (int v = 0; v < net.n(); ++v) {
    std::vector<double> d_out, d_in;
    for (int e : net.out_edges(v))
      d_out.push_back(std::abs(x.vertex[v] - x.edge[e]));
    for (int e : net.in_edges(v))
      d_in.push_back(std::abs(x.vertex[v] - x.edge[e]));
    total += net.cap_out(v).lovasz(d_out) + net.cap_in(v).lovasz(d_in);
  }
  return total;
}

std::vector<int> set_of(const std::vector<char>& in_s) {
  std::vector<int> s;
  for (size_t i = 0; i < in_s.size(); ++i)
    if (in_s[i]) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace

LineEmbedding clamp_and_scale(const PolyNetwork& net, const LineEmbedding& x0) {
  check_finite(net, x0);
  LineEmbedding x = clamp_edges(net, x0);
  const double mn = min_coord(x);
  for (double& c : x.vertex) c -= mn;
  for (double& c : x.edge) c -= mn;
  const double mx = max_coord(x);
  if (mx <= 0) throw DegenerateEmbedding("clamp_and_scale: constant embedding");
  scale_by(x, 1.0 / mx);
  return x;
}

DirectedSweepResult sweep_directed(
    const PolyNetwork& net, const LineEmbedding& x0,
    const std::optional<std::vector<double>>& weights) {
  const LineEmbedding x = normalize_nonneg(net, x0);
  std::vector<double> w(net.n());
  for (int v = 0; v < net.n(); ++v)
    w[v] = weights ? (*weights)[v] : net.weight(v);
  double wx = 0;
  for (int v = 0; v < net.n(); ++v) wx += w[v] * x.vertex[v];
  if (wx <= 0)
    throw DegenerateEmbedding("sweep_directed: zero weighted vertex mass");

  DirectedSweepResult result;
  result.bound_plus = extension_numerator(net, x, true) / wx;
  result.bound_minus = extension_numerator(net, x, false) / wx;

  double best_plus = std::numeric_limits<double>::infinity();
  double best_minus = std::numeric_limits<double>::infinity();
  double t_plus = 0, t_minus = 0;
  for (double t : thresholds_of(x)) {
    std::vector<char> in_s(net.n(), 0);
    double ws = 0;
    for (int v = 0; v < net.n(); ++v)
      if (x.vertex[v] > t) {
        in_s[v] = 1;
        ws += w[v];
      }
    if (ws <= 0) continue;
    const double cp = side_cost(net, in_s, x, t, CutSide::Plus, nullptr);
    const double cm = side_cost(net, in_s, x, t, CutSide::Minus, nullptr);
    if (cp / ws < best_plus) {
      best_plus = cp / ws;
      t_plus = t;
    }
    if (cm / ws < best_minus) {
      best_minus = cm / ws;
      t_minus = t;
    }
  }
  if (!std::isfinite(best_plus))
    throw DegenerateEmbedding("sweep_directed: no threshold with positive mass");

  auto finalize = [&](double t, CutSide side, double ratio) {
    CutResult r;
    std::vector<char> in_s(net.n(), 0);
    for (int v = 0; v < net.n(); ++v)
      if (x.vertex[v] > t) in_s[v] = 1;
    r.cut_value = side_cost(net, in_s, x, t, side, &r.assignment);
    r.side = set_of(in_s);
    r.objective_kind = Objective::Conductance;
    r.objective_value = ratio;
    r.threshold = t;
    return r;
  };
  result.plus = finalize(t_plus, CutSide::Plus, best_plus);
  result.plus.guarantee = result.bound_plus;
  result.minus = finalize(t_minus, CutSide::Minus, best_minus);
  result.minus.guarantee = result.bound_minus;
  assert(result.plus.objective_value <= result.bound_plus + kTol);
  assert(result.minus.objective_value <= result.bound_minus + kTol);
  return result;
}

CutResult sweep_sparsity(const PolyNetwork& net, const LineEmbedding& x0) {
  check_finite(net, x0);
  const LineEmbedding x = clamp_and_scale(net, x0);
  double spread = 0;
  for (int i = 0; i < net.n(); ++i)
    for (int j = i + 1; j < net.n(); ++j)
      spread += net.weight(i) * net.weight(j) *
                std::abs(x.vertex[i] - x.vertex[j]);
  if (spread <= 0)
    throw DegenerateEmbedding("sweep_sparsity: zero pairwise spread");
  const double bound_plus = extension_numerator(net, x, true) / spread;
  const double bound_minus = extension_numerator(net, x, false) / spread;

  double best = std::numeric_limits<double>::infinity();
  double best_t = 0;
  CutSide best_side = CutSide::Plus;
  const double total_w = net.total_weight();
  for (double t : thresholds_of(x)) {
    std::vector<char> in_s(net.n(), 0);
    double ws = 0;
    for (int v = 0; v < net.n(); ++v)
      if (x.vertex[v] > t) {
        in_s[v] = 1;
        ws += net.weight(v);
      }
    const double denom = ws * (total_w - ws);
    if (denom <= 0) continue;
    for (CutSide side : {CutSide::Plus, CutSide::Minus}) {
      const double c = side_cost(net, in_s, x, t, side, nullptr);
      if (c / denom < best) {
        best = c / denom;
        best_t = t;
        best_side = side;
      }
    }
  }
  if (!std::isfinite(best))
    throw DegenerateEmbedding("sweep_sparsity: no balanced threshold");
  CutResult r;
  std::vector<char> in_s(net.n(), 0);
  double ws = 0;
  for (int v = 0; v < net.n(); ++v)
    if (x.vertex[v] > best_t) {
      in_s[v] = 1;
      ws += net.weight(v);
    }
  r.cut_value = side_cost(net, in_s, x, best_t, best_side, &r.assignment);
  r.side = set_of(in_s);
  r.objective_kind = Objective::Sparsity;
  r.objective_value = best;
  r.threshold = best_t;
  r.guarantee = std::min(bound_plus, bound_minus);
  assert(r.objective_value <= r.guarantee + kTol);
  return r;
}

CutResult sweep_symmetric(
    const PolyNetwork& net, const LineEmbedding& x0,
    const std::optional<std::vector<double>>& weights) {
  const LineEmbedding x = normalize_nonneg(net, x0);
  std::vector<double> w(net.n());
  for (int v = 0; v < net.n(); ++v)
    w[v] = weights ? (*weights)[v] : net.degree(v);
  double wx = 0;
  for (int v = 0; v < net.n(); ++v) wx += w[v] * x.vertex[v];
  if (wx <= 0)
    throw DegenerateEmbedding("sweep_symmetric: zero weighted vertex mass");
  const bool all_equal =
      std::all_of(x.vertex.begin(), x.vertex.end(),
                  [&](double v) { return v == x.vertex[0]; });
  if (all_equal)
    throw DegenerateEmbedding("sweep_symmetric: no proper threshold set");
  const double bound = 2.0 * abs_extension_numerator(net, x) / wx;

  double best = std::numeric_limits<double>::infinity();
  double best_t = 0;
  for (double t : thresholds_of(x)) {
    std::vector<char> in_s(net.n(), 0);
    double ws = 0;
    for (int v = 0; v < net.n(); ++v)
      if (x.vertex[v] > t) {
        in_s[v] = 1;
        ws += w[v];
      }
    if (ws <= 0) continue;
    const double c = side_cost(net, in_s, x, t, CutSide::Plus, nullptr) +
                     side_cost(net, in_s, x, t, CutSide::Minus, nullptr);
    if (c / ws < best) {
      best = c / ws;
      best_t = t;
    }
  }
  if (!std::isfinite(best))
    throw DegenerateEmbedding("sweep_symmetric: no threshold with positive mass");
  CutResult r;
  std::vector<char> in_s(net.n(), 0);
  for (int v = 0; v < net.n(); ++v)
    if (x.vertex[v] > best_t) in_s[v] = 1;
  std::map<int, int> owner_plus, owner_minus;
  r.cut_value = side_cost(net, in_s, x, best_t, CutSide::Plus, &owner_plus) +
                side_cost(net, in_s, x, best_t, CutSide::Minus, &owner_minus);
  r.assignment = owner_plus;
  r.assignment.insert(owner_minus.begin(), owner_minus.end());
  r.side = set_of(in_s);
  r.objective_kind = Objective::SymmetricConductance;
  r.objective_value = best;
  r.threshold = best_t;
  r.guarantee = bound;
  assert(r.objective_value <= bound + kTol);
  return r;
}

}  // namespace polycut
