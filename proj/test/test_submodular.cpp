#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"
#include "polycut/harness.hpp"
#include "polycut/submodular.hpp"

using namespace polycut;

namespace {

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

}  // namespace

TEST_CASE("modular evaluation") {
  const SubmodularFn fn =
      SubmodularFn::modular({"e1", "e2", "e3"}, {1, 2, 3});
  CHECK(fn.eval({"e1", "e3"}) == doctest::Approx(4.0));
  CHECK(fn.eval({}) == 0.0);
  CHECK(fn.total() == doctest::Approx(6.0));
}

TEST_CASE("capped additive evaluation") {
  const SubmodularFn fn = SubmodularFn::capped_additive({"e1", "e2"}, {3, 2}, 4);
  CHECK(fn.eval({"e1", "e2"}) == doctest::Approx(4.0));
  CHECK(fn.eval({"e2"}) == doctest::Approx(2.0));
  CHECK(fn.eval({}) == 0.0);
}

TEST_CASE("extension of a modular function is linear") {
  const SubmodularFn fn = SubmodularFn::modular({"a", "b"}, {1, 1});
  CHECK(fn.lovasz(std::vector<double>{0.5, 0.2}) == doctest::Approx(0.7));
  CHECK(fn.lovasz(std::vector<double>{0.0, 0.0}) == 0.0);
}

TEST_CASE("extension of a rank cap follows the level-set integral") {
  const SubmodularFn fn = SubmodularFn::uniform_rank({"a", "b"}, 1.0, 1);
  CHECK(fn.lovasz(std::vector<double>{0.5, 0.3}) == doctest::Approx(0.5));
}

TEST_CASE("greedy base vertex") {
  const SubmodularFn fn = SubmodularFn::modular({"a", "b"}, {1, 2});
  const std::vector<double> v = fn.greedy_vertex(std::vector<double>{7.0, 1.0});
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(2.0));
  const SubmodularFn rk = SubmodularFn::uniform_rank({"a", "b"}, 1.0, 1);
  const std::vector<double> u = rk.greedy_vertex(std::vector<double>{5.0, 1.0});
  CHECK(u[0] == doctest::Approx(1.0));
  CHECK(u[1] == doctest::Approx(0.0));
}

TEST_CASE("greedy vertex in the extension direction attains the extension") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const SubmodularFn fn = random_submodular(rng, {"a", "b", "c", "d"});
    std::vector<double> x(4);
    for (double& v : x)
      v = std::uniform_real_distribution<double>(0, 1)(rng);
    const std::vector<double> g = fn.greedy_vertex(x);
    double dot = 0;
    for (int i = 0; i < 4; ++i) dot += g[i] * x[i];
    CHECK(dot == doctest::Approx(fn.lovasz(x)).epsilon(1e-9));
    CHECK(fn.lovasz(x) == doctest::Approx(theta_integral(fn, x)).epsilon(1e-9));
  }
}

TEST_CASE("single cut edge assignment minimization") {
  const SubmodularFn at_u = SubmodularFn::modular({"e"}, {3});
  const SubmodularFn at_v = SubmodularFn::modular({"e"}, {2});
  std::vector<SfmTerm> terms;
  terms.push_back({&at_u, {{0, false}}});
  terms.push_back({&at_v, {{0, true}}});
  const auto [mask, value] = sfm_min(terms, 1);
  CHECK(value == doctest::Approx(2.0));
  CHECK(mask == 1u);
}

TEST_CASE("capped side absorbs both edges") {
  const SubmodularFn capped =
      SubmodularFn::capped_additive({"e1", "e2"}, {2, 2}, 1);
  const SubmodularFn mod1 = SubmodularFn::modular({"e1"}, {1.5});
  const SubmodularFn mod2 = SubmodularFn::modular({"e2"}, {1.5});
  std::vector<SfmTerm> terms;
  terms.push_back({&capped, {{0, true}, {1, true}}});
  terms.push_back({&mod1, {{0, false}}});
  terms.push_back({&mod2, {{1, false}}});
  const auto [mask, value] = sfm_min(terms, 2);
  CHECK(value == doctest::Approx(1.0));
  CHECK(mask == 3u);
}

TEST_CASE("zero functions minimize to zero") {
  const SubmodularFn zero = SubmodularFn::modular({"e"}, {0});
  std::vector<SfmTerm> terms;
  terms.push_back({&zero, {{0, true}}});
  CHECK(sfm_min(terms, 1).second == 0.0);
}

TEST_CASE("oversized shared component is rejected") {
  std::vector<std::string> ground;
  std::vector<double> w;
  for (int i = 0; i < 26; ++i) {
    ground.push_back("e" + std::to_string(i));
    w.push_back(1.0);
  }
  const SubmodularFn big = SubmodularFn::modular(ground, w);
  SfmTerm term;
  term.fn = &big;
  for (int i = 0; i < 26; ++i) term.lits.push_back({i, true});
  std::vector<SfmTerm> terms{term};
  CHECK_THROWS_AS(sfm_min(terms, 26), CapacityError);
}

TEST_CASE("invalid explicit table is rejected") {
  // violates submodularity: marginal of the second element grows with context
  CHECK_THROWS_AS(
      SubmodularFn::explicit_table({"a", "b"}, {0, 1, 1, 3}), InputError);
  // a valid table round-trips through evaluation
  const SubmodularFn ok = SubmodularFn::explicit_table({"a", "b"}, {0, 1, 1, 1.5});
  CHECK(ok.eval_mask(3) == doctest::Approx(1.5));
}

TEST_CASE("json round trip preserves evaluation") {
  std::mt19937_64 rng(11);
  for (int family = 0; family < 5; ++family) {
    const SubmodularFn fn = random_submodular(rng, {"a", "b", "c"}, family);
    const SubmodularFn back = SubmodularFn::from_json(fn.to_json());
    for (std::uint32_t mask = 0; mask <= fn.full_mask(); ++mask)
      CHECK(back.eval_mask(mask) == doctest::Approx(fn.eval_mask(mask)));
  }
}
