#include "polycut/relax.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"
#include "polycut/jacobi.hpp"
#include "polycut/rounding.hpp"

namespace polycut {

namespace {

double entry(const std::vector<double>& x, int n, int i, int j) {
  return x[static_cast<size_t>(i) * n + j];
}

// Adds c * d/dX of the entry coefficient, splitting off-diagonal terms over
// both halves of the symmetric matrix.
void add_sym(std::vector<double>& g, int n, int i, int j, double c) {
  if (i == j) {
    g[static_cast<size_t>(i) * n + i] += c;
  } else {
    g[static_cast<size_t>(i) * n + j] += 0.5 * c;
    g[static_cast<size_t>(j) * n + i] += 0.5 * c;
  }
}

double sq_dist(const std::vector<double>& x, int n, int i, int j) {
  return entry(x, n, i, i) + entry(x, n, j, j) - 2 * entry(x, n, i, j);
}

double dir_dist(const std::vector<double>& x, int n, int r, int i, int j) {
  return entry(x, n, j, j) - entry(x, n, i, j) + entry(x, n, r, i) -
         entry(x, n, r, j);
}

struct Shape {
  int n = 0, m = 0, N = 0, r = 0;
  std::vector<char> skip, norm;
  std::vector<std::pair<int, int>> pins;  // (edge index, vertex index)
};

Shape make_shape(const PolyNetwork& net, const SdpStructure& st) {
  Shape s;
  s.n = net.n();
  s.m = net.m();
  s.N = s.n + s.m + 1;
  s.r = s.n + s.m;
  s.skip = st.skip_vertex_objective.empty()
               ? std::vector<char>(s.n, 0)
               : st.skip_vertex_objective;
  s.norm = st.norm_vertices.empty() ? std::vector<char>(s.n, 1)
                                    : st.norm_vertices;
  if (static_cast<int>(s.skip.size()) != s.n ||
      static_cast<int>(s.norm.size()) != s.n)
    throw InputError("sdp: structure size mismatch");
  s.pins = st.pinned_edges;
  for (auto [e, v] : s.pins)
    if (e < 0 || e >= s.m || v < 0 || v >= s.n)
      throw InputError("sdp: pinned edge out of range");
  return s;
}

void apply_pins(std::vector<double>& x, const Shape& s) {
  for (auto [e, v] : s.pins) {
    const int a = s.n + e;
    for (int k = 0; k < s.N; ++k) x[static_cast<size_t>(a) * s.N + k] =
        x[static_cast<size_t>(v) * s.N + k];
    for (int k = 0; k < s.N; ++k) x[static_cast<size_t>(k) * s.N + a] =
        x[static_cast<size_t>(k) * s.N + v];
    x[static_cast<size_t>(a) * s.N + a] = x[static_cast<size_t>(v) * s.N + v];
  }
}

void zero_ref(std::vector<double>& x, const Shape& s) {
  for (int k = 0; k < s.N; ++k) {
    x[static_cast<size_t>(s.r) * s.N + k] = 0;
    x[static_cast<size_t>(k) * s.N + s.r] = 0;
  }
}

double spread_of(const PolyNetwork& net, const std::vector<double>& x, int n) {
  double s = 0;
  for (int i = 0; i < net.n(); ++i)
    for (int j = i + 1; j < net.n(); ++j)
      s += net.weight(i) * net.weight(j) * sq_dist(x, n, i, j);
  return s;
}

void scale_all(std::vector<double>& x, double c) {
  for (double& v : x) v *= c;
}

// Congruence centering: shifts every point by the a-weighted combination,
// which preserves positive semidefiniteness.
void center(std::vector<double>& x, int n, const std::vector<double>& a) {
  std::vector<double> c(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += a[j] * entry(x, n, i, j);
    c[i] = s;
  }
  double s2 = 0;
  for (int i = 0; i < n; ++i) s2 += a[i] * c[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      x[static_cast<size_t>(i) * n + j] += s2 - c[i] - c[j];
}

double frob(const std::vector<double>& g) {
  double s = 0;
  for (double v : g) s += v * v;
  return std::sqrt(s);
}

double sparsity_objective_impl(const PolyNetwork& net, const Shape& s,
                               const std::vector<double>& x,
                               std::vector<double>* grad) {
  double obj = 0;
  for (int v = 0; v < s.n; ++v) {
    if (s.skip[v]) continue;
    {
      const auto& outs = net.out_edges(v);
      std::vector<double> c(outs.size());
      for (size_t k = 0; k < outs.size(); ++k)
        c[k] = std::max(0.0, dir_dist(x, s.N, s.r, v, s.n + outs[k]));
      const std::vector<double> y = net.cap_out(v).greedy_vertex(c);
      for (size_t k = 0; k < outs.size(); ++k) {
        obj += y[k] * c[k];
        if (grad && c[k] > 0) {
          const int e = s.n + outs[k];
          add_sym(*grad, s.N, e, e, y[k]);
          add_sym(*grad, s.N, v, e, -y[k]);
          add_sym(*grad, s.N, s.r, v, y[k]);
          add_sym(*grad, s.N, s.r, e, -y[k]);
        }
      }
    }
    {
      const auto& ins = net.in_edges(v);
      std::vector<double> c(ins.size());
      for (size_t k = 0; k < ins.size(); ++k)
        c[k] = std::max(0.0, dir_dist(x, s.N, s.r, s.n + ins[k], v));
      const std::vector<double> y = net.cap_in(v).greedy_vertex(c);
      for (size_t k = 0; k < ins.size(); ++k) {
        obj += y[k] * c[k];
        if (grad && c[k] > 0) {
          const int e = s.n + ins[k];
          add_sym(*grad, s.N, v, v, y[k]);
          add_sym(*grad, s.N, e, v, -y[k]);
          add_sym(*grad, s.N, s.r, e, y[k]);
          add_sym(*grad, s.N, s.r, v, -y[k]);
        }
      }
    }
  }
  return obj;
}

double conductance_objective_impl(const PolyNetwork& net, const Shape& s,
                                  const std::vector<double>& x,
                                  std::vector<double>* grad) {
  double obj = 0;
  for (int v = 0; v < s.n; ++v) {
    if (s.skip[v]) continue;
    auto handle = [&](const std::vector<int>& edges, const SubmodularFn& fn) {
      std::vector<double> c(edges.size());
      for (size_t k = 0; k < edges.size(); ++k)
        c[k] = std::max(0.0, sq_dist(x, s.N, v, s.n + edges[k]));
      const std::vector<double> y = fn.greedy_vertex(c);
      for (size_t k = 0; k < edges.size(); ++k) {
        obj += y[k] * c[k];
        if (grad && c[k] > 0) {
          const int e = s.n + edges[k];
          add_sym(*grad, s.N, v, v, y[k]);
          add_sym(*grad, s.N, e, e, y[k]);
          add_sym(*grad, s.N, v, e, -2 * y[k]);
        }
      }
    };
    handle(net.out_edges(v), net.cap_out(v));
    handle(net.in_edges(v), net.cap_in(v));
  }
  return obj;
}

struct Triple {
  int i, j, k;
  double viol;
};

double full_separation(const std::vector<double>& x, int n,
                       std::vector<Triple>* out) {
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      const double dik = sq_dist(x, n, i, k);
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double v = dik - sq_dist(x, n, i, j) - sq_dist(x, n, j, k);
        if (v > worst) worst = v;
        if (out && v > 1e-12) out->push_back({i, j, k, v});
      }
    }
  return worst;
}

void add_triangle_penalty_grad(std::vector<double>& g, int n,
                               const std::vector<Triple>& viols, double mu) {
  for (const Triple& t : viols) {
    const double c = 2 * mu * t.viol;
    add_sym(g, n, t.j, t.j, -2 * c);
    add_sym(g, n, t.i, t.k, -2 * c);
    add_sym(g, n, t.i, t.j, 2 * c);
    add_sym(g, n, t.j, t.k, 2 * c);
  }
}

// Alternating projection between the PSD cone, the triangle half-spaces and
// the spread normalization. Converges quickly at desk scale.
void polish_triangles(const PolyNetwork& net, const Shape& s,
                      std::vector<double>& x) {
  for (int round = 0; round < 2000; ++round) {
    std::vector<Triple> viols;
    const double worst = full_separation(x, s.N, &viols);
    if (worst <= 1e-10) break;
    for (const Triple& t : viols) {
      const double v = sq_dist(x, s.N, t.i, t.k) - sq_dist(x, s.N, t.i, t.j) -
                       sq_dist(x, s.N, t.j, t.k);
      if (v <= 0) continue;
      const double step = v / 10.0;  // |gradient|^2 of the half-space normal
      add_sym(x, s.N, t.j, t.j, 2 * step);
      add_sym(x, s.N, t.i, t.k, 2 * step);
      add_sym(x, s.N, t.i, t.j, -2 * step);
      add_sym(x, s.N, t.j, t.k, -2 * step);
    }
    apply_pins(x, s);
    x = psd_project(x, s.N);
    apply_pins(x, s);
    const double sp = spread_of(net, x, s.N);
    if (sp > 1e-14) scale_all(x, 1.0 / sp);
  }
}

VectorSolution finish_solution(const PolyNetwork& net, const Shape& s,
                               std::vector<double> x, double objective,
                               bool converged, bool sparsity) {
  VectorSolution sol;
  sol.n = s.n;
  sol.m = s.m;
  sol.gram = std::move(x);
  sol.objective = objective;
  sol.converged = converged;
  sol.residuals.max_triangle_violation =
      sparsity ? full_separation(sol.gram, s.N, nullptr) : 0.0;
  if (sparsity) {
    sol.residuals.constraint = std::abs(spread_of(net, sol.gram, s.N) - 1.0);
    sol.residuals.centering = 0;
  } else {
    double nrm = 0;
    std::vector<double> a(s.N, 0.0);
    double vol = 0;
    for (int v = 0; v < s.n; ++v)
      if (s.norm[v]) {
        nrm += net.degree(v) * entry(sol.gram, s.N, v, v);
        a[v] = net.degree(v);
        vol += net.degree(v);
      }
    sol.residuals.constraint = std::abs(nrm - 1.0);
    double cc = 0;
    for (int i = 0; i < s.N; ++i)
      for (int j = 0; j < s.N; ++j)
        cc += a[i] * a[j] * entry(sol.gram, s.N, i, j);
    sol.residuals.centering = std::sqrt(std::max(0.0, cc)) / std::max(vol, 1.0);
  }
  EigenDecomposition ed = jacobi_eigen(sol.gram, s.N);
  sol.residuals.min_eigenvalue = ed.values.empty() ? 0.0 : ed.values.front();
  return sol;
}

std::vector<double> random_gram(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(static_cast<size_t>(n) * n);
  for (double& c : v) c = g(rng);
  std::vector<double> x(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k)
        s += v[static_cast<size_t>(i) * n + k] * v[static_cast<size_t>(j) * n + k];
      x[static_cast<size_t>(i) * n + j] = s / n;
    }
  return x;
}

}  // namespace

double VectorSolution::dist2(int i, int j) const {
  return sq_dist(gram, dim(), i, j);
}

double VectorSolution::ddist(int i, int j) const {
  return dir_dist(gram, dim(), ref(), i, j);
}

std::vector<std::vector<double>> VectorSolution::factor() const {
  const int N = dim();
  EigenDecomposition ed = jacobi_eigen(gram, N);
  std::vector<std::vector<double>> vecs(N, std::vector<double>(N, 0.0));
  for (int k = 0; k < N; ++k) {
    const double lam = ed.values[k];
    if (lam <= 0) continue;
    const double s = std::sqrt(lam);
    for (int i = 0; i < N; ++i) vecs[i][k] = s * ed.vectors[i * N + k];
  }
  return vecs;
}

nlohmann::json VectorSolution::to_json() const {
  return nlohmann::json{
      {"n", n},
      {"m", m},
      {"gram", gram},
      {"objective", objective},
      {"converged", converged},
      {"residuals",
       {{"constraint", residuals.constraint},
        {"centering", residuals.centering},
        {"max_triangle_violation", residuals.max_triangle_violation},
        {"min_eigenvalue", residuals.min_eigenvalue}}}};
}

VectorSolution VectorSolution::from_json(const nlohmann::json& j) {
  VectorSolution sol;
  sol.n = j.at("n").get<int>();
  sol.m = j.at("m").get<int>();
  sol.gram = j.at("gram").get<std::vector<double>>();
  sol.objective = j.at("objective").get<double>();
  sol.converged = j.value("converged", true);
  if (sol.gram.size() !=
      static_cast<size_t>(sol.dim()) * static_cast<size_t>(sol.dim()))
    throw InputError("solution: gram size mismatch");
  return sol;
}

double sdp_sparsity_objective(const PolyNetwork& net, const VectorSolution& sol,
                              const SdpStructure& structure) {
  const Shape s = make_shape(net, structure);
  if (sol.dim() != s.N) throw InputError("objective: solution size mismatch");
  return sparsity_objective_impl(net, s, sol.gram, nullptr);
}

double sdp_conductance_objective(const PolyNetwork& net,
                                 const VectorSolution& sol,
                                 const SdpStructure& structure) {
  const Shape s = make_shape(net, structure);
  if (sol.dim() != s.N) throw InputError("objective: solution size mismatch");
  return conductance_objective_impl(net, s, sol.gram, nullptr);
}

VectorSolution solve_sdp_sparsity(const PolyNetwork& net, const SdpOptions& opts,
                                  const SdpStructure& structure) {
  const Shape s = make_shape(net, structure);
  if (net.total_weight() <= 0) throw InputError("sdp: zero total vertex weight");

  auto project = [&](std::vector<double>& y) {
    apply_pins(y, s);
    y = psd_project(y, s.N);
    apply_pins(y, s);
    double sp = spread_of(net, y, s.N);
    if (sp <= 1e-14) {
      for (int v = 0; v < s.n; ++v) y[static_cast<size_t>(v) * s.N + v] += 1.0;
      sp = spread_of(net, y, s.N);
    }
    scale_all(y, 1.0 / sp);
  };

  auto run_once = [&](double step0, double mu0, bool ratio_corr, unsigned seed,
                      bool* conv_out) {
    std::mt19937_64 rng(seed);
    std::vector<double> x = random_gram(s.N, rng);
    project(x);

    std::vector<double> best = x;
    double best_obj = std::numeric_limits<double>::infinity();
    bool have_best = false;
    std::uniform_int_distribution<int> pick(0, s.N - 1);

    // Each round restarts the diminishing step schedule from the incumbent,
    // which lets the iterate leave points where the step has decayed to zero.
    for (int round = 0; round < 3; ++round) {
      if (round > 0) x = best;
      double mu = mu0;
      int last_improve = 0;
      for (int iter = 0; iter < opts.max_iters; ++iter) {
      std::vector<Triple> viols;
      double worst;
      const bool full = (iter % 50 == 0);
      if (full) {
        worst = full_separation(x, s.N, &viols);
        // Adapt the penalty both ways: a weight that only grows ends up
        // dominating the subgradient and freezes the objective.
        if (worst > 1e-6)
          mu = std::min(mu * 2.0, 1e7);
        else
          mu = std::max(mu * 0.5, mu0 * 0.01);
      } else {
        worst = 0;
        for (int t = 0; t < 512; ++t) {
          const int i = pick(rng), j = pick(rng), k = pick(rng);
          if (i == j || j == k || i == k) continue;
          const double v = sq_dist(x, s.N, i, k) - sq_dist(x, s.N, i, j) -
                           sq_dist(x, s.N, j, k);
          if (v > 1e-12) viols.push_back({i, j, k, v});
          worst = std::max(worst, v);
        }
      }
      std::vector<double> g(static_cast<size_t>(s.N) * s.N, 0.0);
      const double obj = sparsity_objective_impl(net, s, x, &g);
      // The iterate is rescaled to unit spread after every step; descending
      // along g - obj * grad(spread), the gradient of the normalized ratio,
      // follows a different trajectory than the raw objective gradient, and
      // neither dominates the other, so the schedule below tries both.
      if (ratio_corr) {
        for (int i = 0; i < s.n; ++i)
          for (int j = i + 1; j < s.n; ++j) {
            const double w = obj * net.weight(i) * net.weight(j);
            add_sym(g, s.N, i, i, -w);
            add_sym(g, s.N, j, j, -w);
            add_sym(g, s.N, i, j, 2 * w);
          }
      }
      if (full && worst <= 1e-6 &&
          obj < best_obj - opts.tol * (1.0 + std::abs(best_obj))) {
        best = x;
        best_obj = obj;
        have_best = true;
        last_improve = iter;
      }
      if (iter - last_improve > 3000 && iter > 2000) {
        *conv_out = true;
        break;
      }
      add_triangle_penalty_grad(g, s.N, viols, mu);
      const double gn = frob(g);
      if (gn < 1e-14) {
        *conv_out = true;
        break;
      }
      const double eta = step0 / (std::sqrt(iter + 1.0) * gn);
      for (size_t k = 0; k < x.size(); ++k) x[k] -= eta * g[k];
      project(x);
      }
    }
    if (!have_best) best = x;
    polish_triangles(net, s, best);
    return best;
  };

  // The subgradient iteration can stall at different points depending on the
  // step scale, the penalty ramp and the gradient variant, so restart over a
  // small schedule and keep the lowest feasible objective.
  const std::tuple<double, double, bool> schedule[] = {
      {opts.step, opts.penalty, false},
      {opts.step, opts.penalty, true},
      {opts.step / 2.0, std::max(opts.penalty / 16.0, 0.5), false},
      {opts.step * 2.0, opts.penalty * 16.0, true},
  };
  std::vector<double> best;
  double obj = std::numeric_limits<double>::infinity();
  bool converged = false;
  unsigned seed = opts.seed;
  for (const auto& [st, mu0, rc] : schedule) {
    bool conv = false;
    std::vector<double> cand = run_once(st, mu0, rc, seed++, &conv);
    const double cobj = sparsity_objective_impl(net, s, cand, nullptr);
    if (cobj < obj) {
      best = std::move(cand);
      obj = cobj;
      converged = conv;
    }
  }
  VectorSolution sol =
      finish_solution(net, s, std::move(best), obj, converged, true);

  // Safeguard: a cut recovered from the relaxation embeds back as a feasible
  // two-valued solution; sweep the pivot line map and a few random
  // projections and keep whichever objective is smallest.
  if (structure.pinned_edges.empty() && structure.skip_vertex_objective.empty()) {
    VectorSolution out = sol;
    auto consider = [&](const LineEmbedding& x) {
      try {
        const CutResult cut = sweep_sparsity(net, x);
        VectorSolution integral = embed_integral(net, cut.side);
        if (integral.objective < out.objective) {
          integral.converged = sol.converged;
          out = std::move(integral);
        }
      } catch (const std::runtime_error&) {
        // keep the current best
      }
    };
    try {
      consider(arv_line_map(net, sol).x);
    } catch (const std::runtime_error&) {
    }
    std::mt19937_64 rg(opts.seed + 0x9e3779b9u);
    for (int t = 0; t < 16; ++t) {
      try {
        consider(gaussian_project(net, sol, rg));
      } catch (const std::runtime_error&) {
      }
    }
    return out;
  }
  return sol;
}

VectorSolution solve_sdp_conductance(const PolyNetwork& net,
                                     const SdpOptions& opts,
                                     const SdpStructure& structure) {
  const Shape s = make_shape(net, structure);
  std::vector<double> a(s.N, 0.0);
  double vol = 0;
  for (int v = 0; v < s.n; ++v)
    if (s.norm[v]) {
      vol += net.degree(v);
      a[v] = net.degree(v);
    }
  if (vol <= 0) throw InputError("sdp: zero normalization volume");
  for (double& c : a) c /= vol;

  std::mt19937_64 rng(opts.seed);
  std::vector<double> x = random_gram(s.N, rng);
  auto project = [&](std::vector<double>& y) {
    apply_pins(y, s);
    zero_ref(y, s);
    y = psd_project(y, s.N);
    apply_pins(y, s);
    center(y, s.N, a);
    double nrm = 0;
    for (int v = 0; v < s.n; ++v)
      if (s.norm[v]) nrm += net.degree(v) * entry(y, s.N, v, v);
    if (nrm <= 1e-14) {
      for (int v = 0; v < s.n; ++v)
        if (s.norm[v]) y[static_cast<size_t>(v) * s.N + v] += 1.0;
      center(y, s.N, a);
      nrm = 0;
      for (int v = 0; v < s.n; ++v)
        if (s.norm[v]) nrm += net.degree(v) * entry(y, s.N, v, v);
    }
    scale_all(y, 1.0 / nrm);
  };
  project(x);

  std::vector<double> best = x;
  double best_obj = std::numeric_limits<double>::infinity();
  int last_improve = 0;
  bool converged = false;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    std::vector<double> g(static_cast<size_t>(s.N) * s.N, 0.0);
    const double obj = conductance_objective_impl(net, s, x, &g);
    if (obj < best_obj - opts.tol * (1.0 + std::abs(best_obj))) {
      best = x;
      best_obj = obj;
      last_improve = iter;
    } else if (obj < best_obj) {
      best = x;
      best_obj = obj;
    }
    if (iter - last_improve > 3000 && iter > 2000) {
      converged = true;
      break;
    }
    const double gn = frob(g);
    if (gn < 1e-14) {
      converged = true;
      break;
    }
    const double eta = opts.step / (std::sqrt(iter + 1.0) * gn);
    for (size_t k = 0; k < x.size(); ++k) x[k] -= eta * g[k];
    project(x);
  }
  const double obj = conductance_objective_impl(net, s, best, nullptr);
  return finish_solution(net, s, std::move(best), obj, converged, false);
}

VectorSolution embed_integral(const PolyNetwork& net, const std::vector<int>& s0,
                              CutSide side, const std::map<int, int>& owner) {
  // Reduce the minus side to the plus side of the complement.
  std::vector<int> s = s0;
  if (side == CutSide::Minus) s = complement_set(net.n(), s0);
  std::vector<char> in_s(net.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= net.n()) throw InputError("embed_integral: bad vertex");
    in_s[v] = 1;
  }
  double ws = 0;
  for (int v : s) ws += net.weight(v);
  const double denom = ws * (net.total_weight() - ws);
  if (denom <= 0) throw DegenerateCut("embed_integral: unbalanced cut");
  const double alpha = 1.0 / std::sqrt(denom);

  const int n = net.n(), m = net.m();
  const int N = n + m + 1;
  std::vector<double> val(N, 0.0);
  for (int v = 0; v < n; ++v) val[v] = in_s[v] ? alpha : 0.0;
  val[n + m] = alpha;  // reference
  for (int e = 0; e < m; ++e) {
    const Edge& ed = net.edges()[e];
    if (in_s[ed.tail] == in_s[ed.head]) {
      val[n + e] = val[ed.tail];
    } else if (in_s[ed.tail]) {  // boundary of the plus side
      auto it = owner.find(e);
      if (it == owner.end())
        throw InputError("embed_integral: missing assignment for boundary edge");
      val[n + e] = (it->second == ed.tail) ? 0.0 : alpha;
    } else {  // reverse boundary edge
      val[n + e] = alpha;
    }
  }
  VectorSolution sol;
  sol.n = n;
  sol.m = m;
  sol.gram.assign(static_cast<size_t>(N) * N, 0.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      sol.gram[static_cast<size_t>(i) * N + j] = val[i] * val[j];
  sol.objective = sdp_sparsity_objective(net, sol);
  sol.converged = true;
  sol.residuals.max_triangle_violation =
      full_separation(sol.gram, N, nullptr);
  sol.residuals.constraint = std::abs(spread_of(net, sol.gram, N) - 1.0);
  sol.residuals.min_eigenvalue = 0;
  return sol;
}

VectorSolution embed_integral(const PolyNetwork& net, const std::vector<int>& s) {
  const CutAssignment plus = net.cut_cost(net.boundary(s, CutSide::Plus));
  const CutAssignment minus = net.cut_cost(net.boundary(s, CutSide::Minus));
  if (plus.value <= minus.value) return embed_integral(net, s, CutSide::Plus, plus.owner);
  // The minus boundary of S is the plus boundary of its complement.
  return embed_integral(net, complement_set(net.n(), s), CutSide::Plus,
                        minus.owner);
}

}  // namespace polycut
