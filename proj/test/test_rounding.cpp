#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polycut/harness.hpp"
#include "polycut/rounding.hpp"
#include "polycut/spectral.hpp"

using namespace polycut;

namespace {

LineEmbedding random_centered(const PolyNetwork& net, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  LineEmbedding x;
  x.vertex.resize(net.n());
  x.edge.resize(net.m());
  for (double& v : x.vertex) v = g(rng);
  for (int e = 0; e < net.m(); ++e) {
    const double a = x.vertex[net.edges()[e].tail];
    const double b = x.vertex[net.edges()[e].head];
    x.edge[e] = 0.5 * (a + b);
  }
  return center_embedding(net, x);
}

}  // namespace

TEST_CASE("constant embeddings have zero quotient") {
  std::mt19937_64 rng(31);
  const PolyNetwork net = random_network(rng, 4, 6);
  LineEmbedding x;
  x.vertex.assign(4, 0.6);
  x.edge.assign(net.m(), 0.6);
  const RayleighReport r = rayleigh(net, x);
  CHECK(r.r == doctest::Approx(0.0));
  CHECK(r.denom > 0);
}

TEST_CASE("negation swaps the one-sided quotients") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    const PolyNetwork net = random_network(rng, 5, 9);
    LineEmbedding x = random_centered(net, rng);
    LineEmbedding nx = x;
    for (double& v : nx.vertex) v = -v;
    for (double& v : nx.edge) v = -v;
    const RayleighReport a = rayleigh(net, x);
    const RayleighReport b = rayleigh(net, nx);
    CHECK(a.r_plus == doctest::Approx(b.r_minus).epsilon(1e-9));
    CHECK(a.r_minus == doctest::Approx(b.r_plus).epsilon(1e-9));
  }
}

TEST_CASE("quotient is scaling invariant") {
  std::mt19937_64 rng(41);
  const PolyNetwork net = random_network(rng, 5, 9);
  LineEmbedding x = random_centered(net, rng);
  LineEmbedding sx = x;
  for (double& v : sx.vertex) v *= 2.75;
  for (double& v : sx.edge) v *= 2.75;
  CHECK(rayleigh(net, x).r ==
        doctest::Approx(rayleigh(net, sx).r).epsilon(1e-10));
}

TEST_CASE("two-cycle cut embedding has quotient one half") {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Edge> es{{"f", 0, 1}, {"b", 1, 0}};
  const PolyNetwork net(std::move(vs), std::move(es),
                        {std::nullopt, std::nullopt},
                        {std::nullopt, std::nullopt});
  const LineEmbedding x = cut_to_embedding(net, {0});
  CHECK(rayleigh(net, x).r == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("median shift keeps both supports at half volume") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const PolyNetwork net = random_network(rng, 6, 10);
    const LineEmbedding x = random_centered(net, rng);
    const ShiftSplit s = shift_split(net, x, SplitMode::Symmetric);
    double vol_plus = 0, vol_minus = 0;
    for (int v = 0; v < net.n(); ++v) {
      if (s.shifted.vertex[v] > 0) vol_plus += net.degree(v);
      if (s.shifted.vertex[v] < 0) vol_minus += net.degree(v);
    }
    CHECK(vol_plus <= net.total_volume() / 2 + 1e-9);
    CHECK(vol_minus <= net.total_volume() / 2 + 1e-9);
    // the shift never shrinks the energy
    double ex = 0, ey = 0;
    for (int v = 0; v < net.n(); ++v) {
      ex += net.degree(v) * x.vertex[v] * x.vertex[v];
      ey += net.degree(v) * s.shifted.vertex[v] * s.shifted.vertex[v];
    }
    CHECK(ey >= ex - 1e-9);
  }
}

TEST_CASE("rounded cuts meet the square-root guarantee") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    const PolyNetwork net = random_network(rng, 6, 10);
    const LineEmbedding x = random_centered(net, rng);
    const RayleighReport r = rayleigh(net, x);
    const CutResult cd = cheeger_round_directed(net, x);
    CHECK(cd.objective_value <= 32 * std::sqrt(r.r) + 1e-9);
    double vol = 0;
    for (int v : cd.side) vol += net.degree(v);
    CHECK(std::min(vol, net.total_volume() - vol) <=
          net.total_volume() / 2 + 1e-9);
    const CutResult cs = cheeger_round_symmetric(net, x);
    CHECK(cs.objective_value <= 128 * std::sqrt(r.r_sym) + 1e-9);
  }
}

TEST_CASE("gaussian projections are centered") {
  std::mt19937_64 rng(53);
  const PolyNetwork net = random_network(rng, 5, 8);
  SdpOptions opts;
  opts.max_iters = 4000;
  const VectorSolution sol = solve_sdp_conductance(net, opts);
  for (int t = 0; t < 10; ++t) {
    const LineEmbedding x = gaussian_project(net, sol, rng);
    double mean = 0;
    for (int v = 0; v < net.n(); ++v) mean += net.degree(v) * x.vertex[v];
    CHECK(std::abs(mean) <= 1e-9);
  }
}

TEST_CASE("line map candidates satisfy the directed contraction property") {
  std::mt19937_64 rng(59);
  const PolyNetwork net = random_network(rng, 5, 8);
  const BruteCut b = brute_sparsest(net);
  const VectorSolution sol = embed_integral(net, b.side);
  const LineMapResult lm = arv_line_map(net, sol);
  CHECK(lm.distortion >= 1.0 - 1e-9);
  const int d = net.n() + net.m();
  auto coord = [&](int i) {
    return i < net.n() ? lm.x.vertex[i] : lm.x.edge[i - net.n()];
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double gap = std::max(0.0, coord(i) - coord(j));
      CHECK(gap <= sol.ddist(i, j) + 1e-9);
    }
}

TEST_CASE("pipelines never beat the relaxation") {
  std::mt19937_64 rng(61);
  const PolyNetwork net = random_network(rng, 5, 8);
  SdpOptions opts;
  opts.max_iters = 6000;
  const PipelineResult ps = sparsest_cut_pipeline(net, opts);
  CHECK(ps.cut.objective_value >= ps.sdp_objective - 1e-6);
  CHECK(ps.cut.objective_value ==
        doctest::Approx(net.sparsity(ps.cut.side)).epsilon(1e-9));
  const PipelineResult pc = conductance_pipeline(net, opts, 8, 61, true);
  CHECK(pc.cut.objective_value ==
        doctest::Approx(net.sym_conductance(pc.cut.side)).epsilon(1e-9));
  CHECK(pc.cut.objective_value <=
        128 * std::sqrt(pc.rayleigh_value) + 1e-9);
}
