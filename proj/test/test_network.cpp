#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/network.hpp"

using namespace polycut;

namespace {

PolyNetwork two_cycle() {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Edge> es{{"f", 0, 1}, {"b", 1, 0}};
  return PolyNetwork(std::move(vs), std::move(es), {std::nullopt, std::nullopt},
                     {std::nullopt, std::nullopt});
}

PolyNetwork single_edge() {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Edge> es{{"e", 0, 1}};
  return PolyNetwork(std::move(vs), std::move(es), {std::nullopt, std::nullopt},
                     {std::nullopt, std::nullopt});
}

}  // namespace

TEST_CASE("bidirected two-cycle objectives") {
  const PolyNetwork net = two_cycle();
  const std::vector<int> s{0};
  CHECK(net.cutval(s) == doctest::Approx(1.0));
  CHECK(net.symcutval(s) == doctest::Approx(2.0));
  CHECK(net.sparsity(s) == doctest::Approx(1.0));
  CHECK(net.conductance(s) == doctest::Approx(0.5));
  CHECK(net.sym_conductance(s) == doctest::Approx(1.0));
  CHECK(net.degree(0) == doctest::Approx(2.0));
}

TEST_CASE("boundaries of the full set are empty") {
  const PolyNetwork net = two_cycle();
  const std::vector<int> all{0, 1};
  CHECK(net.cutval(all) == 0.0);
  CHECK(net.symcutval(all) == 0.0);
  CHECK_THROWS_AS(net.sparsity(all), DegenerateCut);
}

TEST_CASE("single directed edge has a free side") {
  const PolyNetwork net = single_edge();
  CHECK(net.cutval({0}) == 0.0);  // empty in-boundary
  CHECK(net.symcutval({0}) == doctest::Approx(1.0));
  CHECK(net.cut_cost({}).value == 0.0);
}

TEST_CASE("cut cost is monotone in the edge set") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const PolyNetwork net = random_network(rng, 5, 8);
    const std::vector<int> small{0, 1};
    const std::vector<int> big{0, 1, 2, 3};
    CHECK(net.cut_cost(small).value <= net.cut_cost(big).value + 1e-12);
  }
}

TEST_CASE("reported assignments reproduce the cut cost") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const PolyNetwork net = random_network(rng, 6, 10);
    const std::vector<int> s{0, 2};
    const CutAssignment a = net.cut_cost(net.boundary(s, CutSide::Plus));
    double recomputed = 0;
    std::vector<std::uint32_t> outm(net.n(), 0), inm(net.n(), 0);
    for (const auto& [e, v] : a.owner) {
      const auto& lst = net.edges()[e].tail == v ? net.out_edges(v)
                                                 : net.in_edges(v);
      std::uint32_t& m = net.edges()[e].tail == v ? outm[v] : inm[v];
      for (size_t p = 0; p < lst.size(); ++p)
        if (lst[p] == e) m |= 1u << p;
    }
    for (int v = 0; v < net.n(); ++v) {
      if (outm[v]) recomputed += net.cap_out(v).eval_mask(outm[v]);
      if (inm[v]) recomputed += net.cap_in(v).eval_mask(inm[v]);
    }
    CHECK(recomputed == doctest::Approx(a.value).epsilon(1e-12));
  }
}

TEST_CASE("bidirecting a single undirected edge gives the two-cycle") {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  const std::vector<std::array<std::string, 3>> und{{"e", "u", "v"}};
  std::vector<std::optional<SubmodularFn>> rho{
      SubmodularFn::modular({"e"}, {1.0}), SubmodularFn::modular({"e"}, {1.0})};
  const PolyNetwork net = bidirect(vs, und, rho);
  CHECK(net.n() == 2);
  CHECK(net.m() == 2);
  CHECK(net.cutval({0}) == doctest::Approx(1.0));
  CHECK(net.sym_conductance({0}) == doctest::Approx(1.0));
}

TEST_CASE("bidirected conductance matches the undirected evaluation") {
  // on bidirected networks cutval(S) is the undirected cut both ways
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const PolyNetwork net = random_network(rng, 5, 8);
    for (std::uint32_t mask = 1; mask + 1 < (1u << 5); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 5; ++i)
        if (mask & (1u << i)) s.push_back(i);
      CHECK(net.cutval(s) <= net.symcutval(s) + 1e-12);
    }
  }
}

TEST_CASE("json round trip preserves objectives") {
  std::mt19937_64 rng(13);
  const PolyNetwork net = random_network(rng, 5, 9);
  const PolyNetwork back = PolyNetwork::from_json(net.to_json());
  for (std::uint32_t mask = 1; mask + 1 < (1u << 5); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) s.push_back(i);
    CHECK(back.cutval(s) == doctest::Approx(net.cutval(s)).epsilon(1e-12));
    CHECK(back.symcutval(s) ==
          doctest::Approx(net.symcutval(s)).epsilon(1e-12));
  }
}
