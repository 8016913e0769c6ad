#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/relax.hpp"
#include "polycut/rounding.hpp"
#include "polycut/spectral.hpp"
#include "polycut/sweep.hpp"

namespace polycut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

double uni(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uni_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double gauss(std::mt19937_64& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

// Level-set integral of the extension: sum over distinct positive values of
// (theta_k - theta_{k-1}) * rho({i : x_i >= theta_k}).
double theta_integral(const SubmodularFn& fn, const std::vector<double>& x) {
  std::vector<double> vals;
  for (double v : x)
    if (v > 0) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  double total = 0, prev = 0;
  for (double th : vals) {
    std::uint32_t mask = 0;
    for (int i = 0; i < fn.size(); ++i)
      if (x[i] >= th) mask |= (1u << i);
    total += (th - prev) * fn.eval_mask(mask);
    prev = th;
  }
  return total;
}

// Cost of an explicit edge-to-endpoint assignment, grouping the edges each
// vertex owns on each side.
double assignment_cost(const PolyNetwork& net,
                       const std::map<int, int>& owner) {
  std::vector<std::uint32_t> out_mask(net.n(), 0), in_mask(net.n(), 0);
  for (const auto& [e, v] : owner) {
    if (net.edges()[e].tail == v) {
      const auto& lst = net.out_edges(v);
      const auto it = std::find(lst.begin(), lst.end(), e);
      out_mask[v] |= 1u << (it - lst.begin());
    } else {
      const auto& lst = net.in_edges(v);
      const auto it = std::find(lst.begin(), lst.end(), e);
      in_mask[v] |= 1u << (it - lst.begin());
    }
  }
  double total = 0;
  for (int v = 0; v < net.n(); ++v) {
    if (out_mask[v]) total += net.cap_out(v).eval_mask(out_mask[v]);
    if (in_mask[v]) total += net.cap_in(v).eval_mask(in_mask[v]);
  }
  return total;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

// ---- criterion bodies; each fills `detail` and returns pass/fail ----------

bool crit_lovasz_laws(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 1000; ++t) {
    const int nn = uni_int(rng, 1, 8);
    std::vector<std::string> ground;
    for (int i = 0; i < nn; ++i) ground.push_back("g" + std::to_string(i));
    const SubmodularFn fn = random_submodular(rng, ground);
    std::vector<double> x(nn), y(nn), x1(nn), x2(nn);
    for (double& v : x) v = uni(rng, 0.0, 1.0);
    const double lx = fn.lovasz(x);
    // level-set integral oracle
    if (std::abs(lx - theta_integral(fn, x)) > tol) ++fails;
    // greedy base vertex attains the extension; other base vertices do not
    // exceed it
    const std::vector<double> g = fn.greedy_vertex(x);
    double dot = 0;
    for (int i = 0; i < nn; ++i) dot += g[i] * x[i];
    if (std::abs(lx - dot) > tol) ++fails;
    for (int r = 0; r < 3; ++r) {
      std::vector<double> dir(nn);
      for (double& v : dir) v = uni(rng, 0.0, 1.0);
      const std::vector<double> b = fn.greedy_vertex(dir);
      double d2 = 0;
      for (int i = 0; i < nn; ++i) d2 += b[i] * x[i];
      if (d2 > lx + tol) ++fails;
    }
    // set recovery on indicators
    std::uint32_t mask = rng() & fn.full_mask();
    std::vector<double> ind(nn, 0.0);
    for (int i = 0; i < nn; ++i)
      if (mask & (1u << i)) ind[i] = 1.0;
    if (std::abs(fn.lovasz(ind) - fn.eval_mask(mask)) > tol) ++fails;
    // positive homogeneity
    const double a = uni(rng, 0.0, 2.0);
    std::vector<double> ax(nn);
    for (int i = 0; i < nn; ++i) ax[i] = a * x[i];
    if (std::abs(fn.lovasz(ax) - a * lx) > tol * (1 + a)) ++fails;
    // monotonicity
    for (int i = 0; i < nn; ++i) y[i] = x[i] + uni(rng, 0.0, 1.0);
    if (lx > fn.lovasz(y) + tol) ++fails;
    // convexity at a midpoint
    std::vector<double> mid(nn);
    for (int i = 0; i < nn; ++i) mid[i] = 0.5 * (x[i] + y[i]);
    if (fn.lovasz(mid) > 0.5 * (lx + fn.lovasz(y)) + tol) ++fails;
    // subadditivity under domination: x' <= x1 + x2
    for (int i = 0; i < nn; ++i) {
      x1[i] = uni(rng, 0.0, 1.0);
      x2[i] = uni(rng, 0.0, 1.0);
    }
    std::vector<double> xd(nn);
    for (int i = 0; i < nn; ++i) xd[i] = (x1[i] + x2[i]) * uni(rng, 0.0, 1.0);
    if (fn.lovasz(xd) > fn.lovasz(x1) + fn.lovasz(x2) + tol) ++fails;
    // doubling: exact split x1 + x2 costs at least half of 2 * extension
    std::vector<double> xs(nn);
    for (int i = 0; i < nn; ++i) xs[i] = x1[i] + x2[i];
    if (fn.lovasz(x1) + fn.lovasz(x2) > 2 * fn.lovasz(xs) + tol) ++fails;
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_sweep_postconditions(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = uni_int(rng, 2, 8);
    const int m = uni_int(rng, n, 14);
    const PolyNetwork net = random_network(rng, n, m);
    std::vector<double> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = net.degree(v);
    for (int rep = 0; rep < 5; ++rep) {
      LineEmbedding x;
      x.vertex.resize(n);
      x.edge.resize(m);
      for (double& v : x.vertex) v = uni(rng, 0.0, 1.0);
      for (double& v : x.edge) v = uni(rng, 0.0, 1.0);
      const DirectedSweepResult d = sweep_directed(net, x);
      for (const CutResult* r : {&d.plus, &d.minus}) {
        const double bound = (r == &d.plus) ? d.bound_plus : d.bound_minus;
        if (r->objective_value > bound + tol) ++fails;
        double ws = 0;
        for (int v : r->side) ws += net.weight(v);
        if (std::abs(r->objective_value - r->cut_value / ws) > tol) ++fails;
        if (std::abs(assignment_cost(net, r->assignment) - r->cut_value) > tol)
          ++fails;
        const CutSide side = (r == &d.plus) ? CutSide::Plus : CutSide::Minus;
        if (r->cut_value <
            net.cut_cost(net.boundary(r->side, side)).value - tol)
          ++fails;
      }
      LineEmbedding z;
      z.vertex.resize(n);
      z.edge.resize(m);
      for (double& v : z.vertex) v = gauss(rng);
      for (double& v : z.edge) v = gauss(rng);
      const CutResult sp = sweep_sparsity(net, z);
      if (sp.objective_value > sp.guarantee + tol) ++fails;
      if (sp.objective_value < net.sparsity(sp.side) - tol) ++fails;
      if (std::abs(assignment_cost(net, sp.assignment) - sp.cut_value) > tol)
        ++fails;
      const CutResult sy = sweep_symmetric(net, x, degs);
      if (sy.objective_value > sy.guarantee + tol) ++fails;
      if (sy.objective_value <
          net.symcutval(sy.side) / net.volume(sy.side) - tol)
        ++fails;
      if (std::abs(assignment_cost(net, sy.assignment) - sy.cut_value) > tol)
        ++fails;
    }
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_relaxation_order(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  int fails = 0;
  double worst_gap = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < 50; ++t) {
    const int n = uni_int(rng, 3, 6);
    const int m = uni_int(rng, n, 10);
    const PolyNetwork net = random_network(rng, n, m);
    const BruteCut best = brute_sparsest(net);
    SdpOptions opts;
    opts.seed = seed + t;
    opts.max_iters = 12000;
    const VectorSolution sol = solve_sdp_sparsity(net, opts);
    worst_gap = std::max(worst_gap, sol.objective - best.value);
    if (sol.objective > best.value + 1e-3) ++fails;
    const VectorSolution ei = embed_integral(net, best.side);
    if (std::abs(ei.objective - net.sparsity(best.side)) > 1e-12) ++fails;
  }
  *detail = "violations=" + std::to_string(fails) +
            " worst_gap=" + fmt(worst_gap);
  return fails == 0;
}

bool crit_cheeger_bounds(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = uni_int(rng, 3, 8);
    const int m = uni_int(rng, n, 12);
    const PolyNetwork net = random_network(rng, n, m);
    LineEmbedding x;
    x.vertex.resize(n);
    x.edge.resize(m);
    for (double& v : x.vertex) v = gauss(rng);
    for (int e = 0; e < m; ++e) {
      const double a = x.vertex[net.edges()[e].tail];
      const double b = x.vertex[net.edges()[e].head];
      x.edge[e] = a + uni(rng, 0.0, 1.0) * (b - a);
    }
    const LineEmbedding xc = center_embedding(net, x);
    const RayleighReport rr = rayleigh(net, xc);
    const CutResult cd = cheeger_round_directed(net, xc);
    if (cd.objective_value > 32 * std::sqrt(rr.r) + tol) ++fails;
    const CutResult cs = cheeger_round_symmetric(net, xc);
    if (cs.objective_value > 128 * std::sqrt(rr.r_sym) + tol) ++fails;
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_gap_certificates(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = uni_int(rng, 3, 7);
    const int m = uni_int(rng, n, 12);
    const PolyNetwork net = random_network(rng, n, m);
    const BruteCut best = brute_conductance(net);
    std::vector<int> s = best.side;
    if (net.volume(s) > net.total_volume() / 2)
      s = complement_set(net.n(), s);
    const LineEmbedding x = cut_to_embedding(net, s);
    const RayleighReport rr = rayleigh(net, x);
    if (std::abs(rr.r - best.value) > tol) ++fails;
    const LineEmbedding xc = center_embedding(net, x);
    const RayleighReport rc = rayleigh(net, xc);
    if (rc.r > 2 * best.value + tol) ++fails;
    const CutResult rounded = cheeger_round_directed(net, xc);
    if (best.value > rounded.objective_value + tol) ++fails;
    if (best.value > 32 * std::sqrt(rc.r) + tol) ++fails;
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_factor_graph(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 30; ++t) {
    const int n = uni_int(rng, 2, 5);
    const int k = uni_int(rng, 1, 4);
    const PolyHypergraph h = random_hypergraph(rng, n, k);
    const FactorGraph fg = factor_graph(h);
    const int ng = fg.net.n();
    // sparsest-cut equality between the hypergraph and its factor network
    double phi_h = std::numeric_limits<double>::infinity();
    if (n >= 2) phi_h = brute_h_sparsest(h).value;
    double phi_g = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask + 1 < (1u << ng); ++mask) {
      try {
        phi_g = std::min(phi_g, fg.net.sparsity(mask_to_set(mask, ng)));
      } catch (const DegenerateCut&) {
      }
    }
    if (std::abs(phi_h - phi_g) > tol) ++fails;
    // symmetric cut and volume identities over admissible pairs
    const std::uint32_t efull = (1u << k) - 1u;
    for (std::uint32_t vmask = 1; vmask + 1 < (1u << n); ++vmask) {
      const std::vector<int> vset = mask_to_set(vmask, n);
      const std::vector<int> cvset = complement_set(n, vset);
      for (std::uint32_t emask = 0; emask <= efull; ++emask) {
        const std::vector<int> eset = mask_to_set(emask, k);
        std::vector<int> ceset;
        for (int e = 0; e < k; ++e)
          if (!(emask & (1u << e))) ceset.push_back(e);
        // the identity needs both sides admissible: an edge outside the set
        // must keep a member outside, else the factor graph pays for arcs the
        // hypergraph side never counts
        if (!h.admissible(vset, eset) || !h.admissible(cvset, ceset)) continue;
        std::vector<int> fset = vset;
        for (int e : eset) fset.push_back(n + e);
        const double lhs = h.sym_cut(vset, eset) + h.sym_cut(cvset, ceset);
        if (std::abs(lhs - fg.net.symcutval(fset)) > tol) ++fails;
        double vol_h = 0;
        for (int e : eset) vol_h += h.edge_degree(e);
        double vol_g = 0;
        for (int i : fset) vol_g += fg.volume_weights[i];
        if (std::abs(vol_h - vol_g) > tol) ++fails;
      }
    }
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_psi_machinery(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 30; ++t) {
    const int n = uni_int(rng, 3, 6);
    const int k = uni_int(rng, 5, 6);
    std::vector<double> w;
    const PolyHypergraph h = random_uniform_hypergraph(rng, n, k, &w);
    const int ke = h.k();
    // per-set sandwich over admissible half-volume sets
    const std::uint32_t efull = (1u << ke) - 1u;
    for (std::uint32_t vmask = 1; vmask + 1 < (1u << n); ++vmask) {
      const std::vector<int> vset = mask_to_set(vmask, n);
      for (std::uint32_t emask = 0; emask <= efull; ++emask) {
        const std::vector<int> eset = mask_to_set(emask, ke);
        double vol = 0;
        for (int e : eset) vol += h.edge_degree(e);
        if (vol <= 0 || vol > h.total_volume() / 2 + 1e-12) continue;
        // The sandwich needs the set and its complement admissible, since the
        // symmetric conductance charges boundary edges from both sides.
        if (!h.admissible(vset, eset)) continue;
        const std::vector<int> cvset = mask_to_set(~vmask & ((1u << n) - 1u), n);
        const std::vector<int> ceset = mask_to_set(efull & ~emask, ke);
        if (!h.admissible(cvset, ceset)) continue;
        const double cond = h.sym_conductance(vset, eset);
        const double ps = psi(h, w, vset);
        if (ps > cond + tol) ++fails;
        if (ps < cond / (1 + cond) - tol) ++fails;
      }
    }
    // global factor-5 bracket
    const double cond_star = brute_h_sym_conductance(h).value;
    const double psi_star = brute_psi(h, w).value;
    if (psi_star > cond_star + tol) ++fails;
    if (cond_star > 5 * psi_star + tol) ++fails;
    // a near-balanced set of symmetric conductance at most 4 always exists
    const auto [bv, be] = balanced_admissible_set(h);
    if (h.sym_conductance(bv, be) > 4 + tol) ++fails;
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_vertex_expansion(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  const double tol = 1e-9;
  int fails = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = uni_int(rng, 3, 7);
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> adjacency;
    random_graph(rng, n, &vertices, &adjacency);
    std::vector<double> w;
    const PolyHypergraph h = vertex_expansion_reduce(vertices, adjacency, &w);
    double total_w = 0;
    for (const Vertex& v : vertices) total_w += v.weight;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const std::vector<int> s = mask_to_set(mask, n);
      double ws = 0;
      for (int v : s) ws += vertices[v].weight;
      if (ws > total_w / 2 + 1e-12) continue;
      const double ex = sym_vertex_expansion(vertices, adjacency, s);
      const double ps = psi(h, w, s);
      if (ps > ex + tol) ++fails;
      if (ps < ex / (1 + ex) - tol) ++fails;
    }
    const double ex_star = brute_sym_vertex_expansion(vertices, adjacency).value;
    const double psi_star = brute_psi(h, w).value;
    if (psi_star > ex_star + tol) ++fails;
    if (ex_star > 5 * psi_star + tol) ++fails;
  }
  *detail = "violations=" + std::to_string(fails);
  return fails == 0;
}

bool crit_gaussian_stats(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  // mass-retention frequency of a one-dimensional Gaussian projection
  const PolyNetwork net = random_network(rng, 6, 10);
  SdpOptions opts;
  opts.seed = seed;
  opts.max_iters = 6000;
  const VectorSolution sol = solve_sdp_conductance(net, opts);
  const std::vector<std::vector<double>> vecs = sol.factor();
  double target = 0;
  for (int v = 0; v < net.n(); ++v)
    target += net.degree(v) * sol.gram[v * sol.dim() + v];
  int success = 0;
  const int draws = 10000;
  std::vector<double> g(sol.dim());
  for (int t = 0; t < draws; ++t) {
    for (double& v : g) v = gauss(rng);
    double mass = 0;
    for (int v = 0; v < net.n(); ++v) {
      double xv = 0;
      for (int c = 0; c < sol.dim(); ++c) xv += vecs[v][c] * g[c];
      mass += net.degree(v) * xv * xv;
    }
    if (mass >= 0.5 * target) ++success;
  }
  const double freq = static_cast<double>(success) / draws;
  const bool ok_freq = freq >= 1.0 / 12.0 - 0.02;

  // dimension-reduction expectation bound for the extension of squared
  // projections
  bool ok_ratio = true;
  double worst_ratio = 0;
  const int nn = 5, samples = 100000;
  for (int d = 1; d <= 12; ++d) {
    std::vector<std::string> ground;
    for (int i = 0; i < nn; ++i) ground.push_back("g" + std::to_string(i));
    const SubmodularFn fn = random_submodular(rng, ground);
    std::vector<std::vector<double>> a(nn, std::vector<double>(d));
    std::vector<double> norms(nn);
    for (int i = 0; i < nn; ++i) {
      for (double& v : a[i]) v = gauss(rng);
      for (double v : a[i]) norms[i] += v * v;
    }
    const double denom = fn.lovasz(norms);
    double acc = 0;
    std::vector<double> gg(d), sq(nn);
    for (int t = 0; t < samples; ++t) {
      for (double& v : gg) v = gauss(rng);
      for (int i = 0; i < nn; ++i) {
        double dot = 0;
        for (int c = 0; c < d; ++c) dot += a[i][c] * gg[c];
        sq[i] = dot * dot;
      }
      acc += fn.lovasz(sq);
    }
    const double ratio = (acc / samples) / denom;
    worst_ratio = std::max(worst_ratio, ratio / (4 * std::log(d + 1.0)));
    if (ratio > 4 * std::log(d + 1.0)) ok_ratio = false;
  }
  *detail = "success_freq=" + fmt(freq) +
            " worst_ratio_fraction=" + fmt(worst_ratio);
  return ok_freq && ok_ratio;
}

bool crit_end_to_end(unsigned seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  int fails = 0;
  double worst_sparse = 0, worst_cond = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = uni_int(rng, 4, 8);
    const int m = uni_int(rng, n, 14);
    const PolyNetwork net = random_network(rng, n, m);
    SdpOptions opts;
    opts.seed = seed + t;
    opts.max_iters = 8000;
    const BruteCut bs = brute_sparsest(net);
    const PipelineResult ps = sparsest_cut_pipeline(net, opts);
    const double rs = ps.cut.objective_value / bs.value;
    worst_sparse = std::max(worst_sparse, rs);
    if (rs > 4) ++fails;
    const BruteCut bc = brute_sym_conductance(net);
    const PipelineResult pc = conductance_pipeline(net, opts, 32, seed + t);
    const double rc = pc.cut.objective_value / bc.value;
    worst_cond = std::max(worst_cond, rc);
    if (rc > 4) ++fails;
  }
  *detail = "violations=" + std::to_string(fails) +
            " worst_sparsity_ratio=" + fmt(worst_sparse) +
            " worst_conductance_ratio=" + fmt(worst_cond);
  return fails == 0;
}

struct CriterionSpec {
  int id;
  const char* name;
  double budget_seconds;
  bool (*body)(unsigned, std::string*);
};

constexpr CriterionSpec kCriteria[] = {
    {1, "extension-laws", 10, crit_lovasz_laws},
    {2, "sweep-postconditions", 60, crit_sweep_postconditions},
    {3, "relaxation-ordering", 300, crit_relaxation_order},
    {4, "cheeger-rounding-bounds", 60, crit_cheeger_bounds},
    {5, "gap-certificates", 60, crit_gap_certificates},
    {6, "factor-graph-identities", 120, crit_factor_graph},
    {7, "all-or-nothing-sandwich", 60, crit_psi_machinery},
    {8, "vertex-expansion-reduction", 30, crit_vertex_expansion},
    {9, "gaussian-projection-statistics", 120, crit_gaussian_stats},
    {10, "end-to-end-ratio-gates", 600, crit_end_to_end},
};

}  // namespace

std::vector<CriterionResult> run_suite(unsigned seed, std::ostream* log,
                                       int only) {
  std::vector<CriterionResult> out;
  for (const CriterionSpec& spec : kCriteria) {
    if (only != 0 && spec.id != only) continue;
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = spec.body(seed * 1000 + spec.id, &r.detail);
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = seconds_since(start);
    if (r.seconds > spec.budget_seconds) {
      ok = false;
      r.detail += " over_budget(" + fmt(spec.budget_seconds) + "s)";
    }
    r.passed = ok;
    if (log) {
      *log << "[" << std::setw(2) << r.id << "] "
           << (r.passed ? "PASS" : "FAIL") << " " << r.name << " ("
           << fmt(r.seconds) << "s) " << r.detail << "\n"
           << std::flush;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace polycut
