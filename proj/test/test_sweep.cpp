#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/sweep.hpp"

using namespace polycut;

TEST_CASE("edge coordinates clamp into the endpoint range") {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Edge> es{{"e", 0, 1}};
  const PolyNetwork net(std::move(vs), std::move(es),
                        {std::nullopt, std::nullopt},
                        {std::nullopt, std::nullopt});
  LineEmbedding x;
  x.vertex = {1.0, 0.0};
  x.edge = {5.0};
  const LineEmbedding c = clamp_and_scale(net, x);
  CHECK(c.vertex[0] == doctest::Approx(1.0));
  CHECK(c.vertex[1] == doctest::Approx(0.0));
  CHECK(c.edge[0] == doctest::Approx(1.0));
}

TEST_CASE("indicator sweep recovers the cut ratio") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const PolyNetwork net = random_network(rng, 5, 9);
    const std::vector<int> s{0, 2};
    LineEmbedding x;
    x.vertex.assign(5, 0.0);
    for (int v : s) x.vertex[v] = 1.0;
    x.edge.assign(net.m(), 0.0);
    for (int e = 0; e < net.m(); ++e) {
      // edge coordinate at its tail keeps the level sets two-valued
      x.edge[e] = x.vertex[net.edges()[e].tail];
    }
    const DirectedSweepResult d = sweep_directed(net, x);
    double ws = 0;
    for (int v : d.plus.side) ws += net.weight(v);
    CHECK(d.plus.objective_value ==
          doctest::Approx(d.plus.cut_value / ws).epsilon(1e-9));
    CHECK(d.plus.objective_value <= d.bound_plus + 1e-9);
    CHECK(d.minus.objective_value <= d.bound_minus + 1e-9);
  }
}

TEST_CASE("three-vertex path sweep picks a finite-threshold cut") {
  std::vector<Vertex> vs{{"a", 1.0}, {"b", 1.0}, {"c", 1.0}};
  std::vector<Edge> es{{"e1", 0, 1}, {"e2", 1, 2}};
  const PolyNetwork net(std::move(vs), std::move(es),
                        {std::nullopt, std::nullopt, std::nullopt},
                        {std::nullopt, std::nullopt, std::nullopt});
  LineEmbedding x;
  x.vertex = {1.0, 0.5, 0.0};
  x.edge = {0.75, 0.25};
  const DirectedSweepResult d = sweep_directed(net, x);
  CHECK(!d.plus.side.empty());
  CHECK(d.plus.side.size() < 3);
  CHECK(d.plus.objective_value <= d.bound_plus + 1e-9);
}

TEST_CASE("sparsity sweep is exact on its returned set") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    const PolyNetwork net = random_network(rng, 6, 10);
    LineEmbedding x;
    x.vertex.resize(6);
    x.edge.resize(net.m());
    std::normal_distribution<double> g(0.0, 1.0);
    for (double& v : x.vertex) v = g(rng);
    for (double& v : x.edge) v = g(rng);
    const CutResult r = sweep_sparsity(net, x);
    // the reported ratio certifies its explicit assignment, so it can only
    // overestimate the optimal-assignment sparsity of the returned set
    CHECK(r.objective_value >= net.sparsity(r.side) - 1e-9);
    CHECK(r.objective_value <= r.guarantee + 1e-9);
    // translation invariance of the returned set
    LineEmbedding y = x;
    for (double& v : y.vertex) v += 3.25;
    for (double& v : y.edge) v += 3.25;
    const CutResult r2 = sweep_sparsity(net, y);
    CHECK(r2.side == r.side);
  }
}

TEST_CASE("symmetric sweep certifies twice the extension bound") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const PolyNetwork net = random_network(rng, 6, 10);
    std::vector<double> degs(6);
    for (int v = 0; v < 6; ++v) degs[v] = net.degree(v);
    LineEmbedding x;
    x.vertex.resize(6);
    x.edge.resize(net.m());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : x.vertex) v = u(rng);
    for (double& v : x.edge) v = u(rng);
    const CutResult r = sweep_symmetric(net, x, degs);
    CHECK(r.objective_value <= r.guarantee + 1e-9);
    // certified joint assignment cannot beat the optimal symmetric cut
    CHECK(r.objective_value >=
          net.symcutval(r.side) / net.volume(r.side) - 1e-9);
  }
}

TEST_CASE("constant embedding has no proper threshold set") {
  std::mt19937_64 rng(8);
  const PolyNetwork net = random_network(rng, 4, 6);
  LineEmbedding x;
  x.vertex.assign(4, 0.7);
  x.edge.assign(net.m(), 0.7);
  CHECK_THROWS_AS(sweep_symmetric(net, x), DegenerateEmbedding);
}
