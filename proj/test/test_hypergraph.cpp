#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/hypergraph.hpp"

using namespace polycut;

TEST_CASE("single triple edge cut takes the cheaper side") {
  std::vector<Vertex> vs{{"a", 1.0}, {"b", 1.0}, {"c", 1.0}};
  std::vector<Hyperedge> es{{"h", {0, 1, 2}}};
  std::vector<SubmodularFn> fp{
      SubmodularFn::capped_additive({"a", "b", "c"}, {2, 2, 2}, 3)};
  std::vector<SubmodularFn> fm{
      SubmodularFn::capped_additive({"a", "b", "c"}, {1, 1, 1}, 2)};
  const PolyHypergraph h(std::move(vs), std::move(es), std::move(fp),
                         std::move(fm));
  // min(f_minus({a}), f_plus({b,c})) = min(1, 3) = 1
  CHECK(h.cutval({0}) == doctest::Approx(1.0));
  CHECK(h.cutval({0, 1, 2}) == 0.0);
}

TEST_CASE("uniform splitting doubles the weight into the degree") {
  std::vector<Vertex> vs{{"a", 1.0}, {"b", 1.0}};
  std::vector<Hyperedge> es{{"h", {0, 1}}};
  const PolyHypergraph h =
      PolyHypergraph::uniform(std::move(vs), std::move(es), {1.5});
  CHECK(h.edge_degree(0) == doctest::Approx(3.0));
  CHECK(h.cutval({0}) == doctest::Approx(1.5));
}

TEST_CASE("factor graph of one binary edge is the four-arc gadget") {
  std::vector<Vertex> vs{{"u", 1.0}, {"v", 1.0}};
  std::vector<Hyperedge> es{{"h", {0, 1}}};
  const PolyHypergraph h =
      PolyHypergraph::uniform(std::move(vs), std::move(es), {1.0});
  const FactorGraph fg = factor_graph(h);
  CHECK(fg.net.n() == 3);
  CHECK(fg.net.m() == 4);
  CHECK(fg.net.weight(2) == 0.0);
  CHECK(fg.volume_weights[2] == doctest::Approx(h.edge_degree(0)));
}

TEST_CASE("hypergraph and factor-graph sparsest cuts agree") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 10; ++t) {
    const PolyHypergraph h = random_hypergraph(rng, 4, 3);
    const FactorGraph fg = factor_graph(h);
    const double phi_h = brute_h_sparsest(h).value;
    double phi_g = std::numeric_limits<double>::infinity();
    const int ng = fg.net.n();
    for (std::uint32_t mask = 1; mask + 1 < (1u << ng); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < ng; ++i)
        if (mask & (1u << i)) s.push_back(i);
      try {
        phi_g = std::min(phi_g, fg.net.sparsity(s));
      } catch (const DegenerateCut&) {
      }
    }
    CHECK(phi_h == doctest::Approx(phi_g).epsilon(1e-9));
  }
}

TEST_CASE("transferred cuts never cost more in the factor graph") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 10; ++t) {
    const PolyHypergraph h = random_hypergraph(rng, 5, 3);
    const FactorGraph fg = factor_graph(h);
    for (std::uint32_t mask = 1; mask + 1 < (1u << 5); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 5; ++i)
        if (mask & (1u << i)) s.push_back(i);
      const std::vector<int> tset = h_cut_to_factor_set(h, s);
      CHECK(fg.net.sparsity(tset) <= h.sparsity(s) + 1e-9);
    }
  }
}

TEST_CASE("cleanup yields admissible sets without raising conductance") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 10; ++t) {
    const PolyHypergraph h = random_hypergraph(rng, 4, 3);
    const FactorGraph fg = factor_graph(h);
    const int ng = fg.net.n();
    for (std::uint32_t mask = 1; mask + 1 < (1u << ng); ++mask) {
      std::vector<int> tset;
      for (int i = 0; i < ng; ++i)
        if (mask & (1u << i)) tset.push_back(i);
      const auto [vset, eset] = factor_set_to_h(h, tset);
      CHECK(h.admissible(vset, eset));
    }
  }
}

TEST_CASE("balanced admissible set has conductance at most four") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> w;
    const PolyHypergraph h = random_uniform_hypergraph(rng, 5, 6, &w);
    const auto [vset, eset] = balanced_admissible_set(h);
    CHECK(h.sym_conductance(vset, eset) <= 4.0 + 1e-9);
  }
}

TEST_CASE("star reduction counts boundary vertices") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 10; ++t) {
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> adjacency;
    random_graph(rng, 5, &vertices, &adjacency);
    std::vector<double> w;
    const PolyHypergraph h = vertex_expansion_reduce(vertices, adjacency, &w);
    CHECK(h.k() == 5);
    for (std::uint32_t mask = 1; mask + 1 < (1u << 5); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 5; ++i)
        if (mask & (1u << i)) s.push_back(i);
      // cut weight of the star hypergraph equals the boundary vertex weight
      double cutw = 0;
      for (int e = 0; e < h.k(); ++e) {
        bool in = false, out = false;
        for (int v : h.edges()[e].members)
          (std::find(s.begin(), s.end(), v) != s.end() ? in : out) = true;
        if (in && out) cutw += w[e];
      }
      const double ex = sym_vertex_expansion(vertices, adjacency, s);
      double ws = 0, wt = 0;
      for (int v = 0; v < 5; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end())
          ws += vertices[v].weight;
        else
          wt += vertices[v].weight;
      }
      CHECK(ex == doctest::Approx(cutw / std::min(ws, wt)).epsilon(1e-9));
    }
  }
}

TEST_CASE("hypergraph json round trip") {
  std::mt19937_64 rng(89);
  const PolyHypergraph h = random_hypergraph(rng, 4, 3);
  const PolyHypergraph back = PolyHypergraph::from_json(h.to_json());
  for (std::uint32_t mask = 1; mask + 1 < (1u << 4); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) s.push_back(i);
    CHECK(back.cutval(s) == doctest::Approx(h.cutval(s)).epsilon(1e-12));
  }
}
