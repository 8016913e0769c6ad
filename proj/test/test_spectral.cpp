#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polycut/harness.hpp"
#include "polycut/rounding.hpp"
#include "polycut/spectral.hpp"

using namespace polycut;

TEST_CASE("cut embeddings certify the cut conductance exactly") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 15; ++t) {
    const PolyNetwork net = random_network(rng, 5, 9);
    const BruteCut b = brute_conductance(net);
    std::vector<int> s = b.side;
    if (net.volume(s) > net.total_volume() / 2) s = complement_set(5, s);
    const LineEmbedding x = cut_to_embedding(net, s);
    CHECK(rayleigh(net, x).r == doctest::Approx(b.value).epsilon(1e-9));
    const LineEmbedding xc = center_embedding(net, x);
    CHECK(rayleigh(net, xc).r <= 2 * b.value + 1e-9);
  }
}

TEST_CASE("centering removes the degree-weighted mean") {
  std::mt19937_64 rng(101);
  const PolyNetwork net = random_network(rng, 6, 10);
  LineEmbedding x;
  x.vertex.resize(6);
  x.edge.resize(net.m());
  std::normal_distribution<double> g(0.0, 1.0);
  for (double& v : x.vertex) v = g(rng);
  for (double& v : x.edge) v = g(rng);
  const LineEmbedding c = center_embedding(net, x);
  double mean = 0;
  for (int v = 0; v < 6; ++v) mean += net.degree(v) * c.vertex[v];
  CHECK(std::abs(mean) <= 1e-9);
}

TEST_CASE("gap estimate is bracketed by the brute conductance") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 3; ++t) {
    const PolyNetwork net = random_network(rng, 5, 8);
    const BruteCut b = brute_conductance(net);
    const GapEstimate ge = estimate_gamma2(net, 3, 103 + t, 40);
    CHECK(ge.upper <= 2 * b.value + 1e-6);
    CHECK(b.value <= 32 * std::sqrt(ge.upper) + 1e-9);
    CHECK(ge.cut.objective_value <= 32 * std::sqrt(ge.upper) + 1e-9);
  }
}

TEST_CASE("disconnected networks have near-zero gap") {
  std::vector<Vertex> vs{{"a", 1.0}, {"b", 1.0}, {"c", 1.0}, {"d", 1.0}};
  std::vector<Edge> es{{"e1", 0, 1}, {"e2", 1, 0}, {"e3", 2, 3}, {"e4", 3, 2}};
  const PolyNetwork net(
      std::move(vs), std::move(es),
      {std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      {std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  const GapEstimate ge = estimate_gamma2(net, 3, 5, 40);
  CHECK(ge.upper <= 1e-9);
}
