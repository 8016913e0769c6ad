#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "polycut/harness.hpp"
#include "polycut/relax.hpp"

using namespace polycut;

namespace {

PolyNetwork two_cycle() {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Edge> es{{"f", 0, 1}, {"b", 1, 0}};
  return PolyNetwork(std::move(vs), std::move(es), {std::nullopt, std::nullopt},
                     {std::nullopt, std::nullopt});
}

}  // namespace

TEST_CASE("integral embedding reproduces the cut sparsity exactly") {
  const PolyNetwork net = two_cycle();
  const VectorSolution sol = embed_integral(net, {0});
  CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sol.objective ==
        doctest::Approx(sdp_sparsity_objective(net, sol)).epsilon(1e-12));
  CHECK(sol.residuals.max_triangle_violation <= 1e-12);
  CHECK(sol.residuals.constraint <= 1e-12);
}

TEST_CASE("integral embeddings match the sparsity on random instances") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const PolyNetwork net = random_network(rng, 5, 9);
    const BruteCut b = brute_sparsest(net);
    const VectorSolution sol = embed_integral(net, b.side);
    CHECK(sol.objective ==
          doctest::Approx(net.sparsity(b.side)).epsilon(1e-12));
  }
}

TEST_CASE("a one-way edge admits a zero-objective relaxation") {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Edge> es{{"e", 0, 1}};
  const PolyNetwork net(std::move(vs), std::move(es),
                        {std::nullopt, std::nullopt},
                        {std::nullopt, std::nullopt});
  SdpOptions opts;
  opts.max_iters = 4000;
  const VectorSolution sol = solve_sdp_sparsity(net, opts);
  CHECK(sol.objective <= 1e-3);
}

TEST_CASE("sparsity relaxation lower-bounds the optimum") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 5; ++t) {
    const PolyNetwork net = random_network(rng, 4, 7);
    const BruteCut b = brute_sparsest(net);
    SdpOptions opts;
    opts.seed = 19 + t;
    opts.max_iters = 8000;
    const VectorSolution sol = solve_sdp_sparsity(net, opts);
    CHECK(sol.objective <= b.value + 1e-3);
    CHECK(sol.residuals.max_triangle_violation <= 1e-6);
  }
}

TEST_CASE("directed distance is a semimetric on feasible solutions") {
  std::mt19937_64 rng(23);
  const PolyNetwork net = random_network(rng, 4, 6);
  SdpOptions opts;
  opts.max_iters = 5000;
  const VectorSolution sol = solve_sdp_sparsity(net, opts);
  const int d = net.n() + net.m();
  for (int i = 0; i < d; ++i) {
    CHECK(sol.ddist(i, i) == doctest::Approx(0.0).epsilon(1e-9));
    for (int j = 0; j < d; ++j) {
      CHECK(sol.ddist(i, j) >= -1e-6);
      for (int k = 0; k < d; ++k)
        CHECK(sol.ddist(i, j) + sol.ddist(j, k) >= sol.ddist(i, k) - 1e-6);
    }
  }
}

TEST_CASE("conductance relaxation stays feasible") {
  std::mt19937_64 rng(29);
  const PolyNetwork net = random_network(rng, 5, 8);
  SdpOptions opts;
  opts.max_iters = 5000;
  const VectorSolution sol = solve_sdp_conductance(net, opts);
  CHECK(sol.residuals.constraint <= 1e-8);
  CHECK(sol.residuals.centering <= 1e-8);
  CHECK(sol.residuals.min_eigenvalue >= -1e-9);
  CHECK(std::isfinite(sol.objective));
  CHECK(sol.objective >= -1e-9);
}

TEST_CASE("vector solutions round trip through json") {
  const PolyNetwork net = two_cycle();
  const VectorSolution sol = embed_integral(net, {0});
  const VectorSolution back = VectorSolution::from_json(sol.to_json());
  CHECK(back.n == sol.n);
  CHECK(back.m == sol.m);
  CHECK(back.objective == doctest::Approx(sol.objective));
  for (size_t i = 0; i < sol.gram.size(); ++i)
    CHECK(back.gram[i] == doctest::Approx(sol.gram[i]));
}
