#include <doctest.h>

#include "altexp/alt_functions.hpp"
#include "altexp/errors.hpp"
#include "altexp/reference.hpp"
#include "altexp/transform.hpp"
#include "oracles.hpp"

using namespace altexp;

namespace {

SampleSet random_samples(const GridSpec& grid, unsigned seed) {
  const auto values = oracle::random_values(domain_size(grid.N), seed);
  SampleSet s{grid, {}};
  std::size_t i = 0;
  for (const auto& gp : grid_points(grid)) s.values.emplace(gp.index, values[i++]);
  return s;
}

double max_diff(const std::map<IndexTriple, Complex>& a, const std::map<IndexTriple, Complex>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (const auto& [k, v] : a) worst = std::max(worst, std::abs(v - b.at(k)));
  return worst;
}

}  // namespace

TEST_CASE("constant samples give beta_000 = 1/3") {
  for (const int N : {1, 2, 4, 5}) {
    const GridSpec grid{0.2, 0.3, N, 1.0};
    const auto beta = adft_forward(SampleSet::from_function(grid, [](const Point3&) { return Complex{1.0}; }));
    CHECK(beta.role == CoefficientRole::beta);
    for (const auto& [key, v] : beta.values) {
      const double expected = key == IndexTriple{0, 0, 0} ? 1.0 / 3.0 : 0.0;
      CHECK(std::abs(v - expected) < 1e-13);
    }
  }
}

TEST_CASE("samples of one E function give a delta") {
  const GridSpec grid{-0.1, 0.7, 5, 1.0};
  for (const auto& t0 : enumerate_domain({0, 4})) {
    const auto beta = adft_forward(SampleSet::from_function(grid, [&](const Point3& p) { return eval_E(t0, p); }));
    for (const auto& [key, v] : beta.values) CHECK(std::abs(v - (key == t0 ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("forward transform matches brute-force sum") {
  for (const auto& [a, b, N] : {std::tuple{0.0, 0.0, 3}, std::tuple{0.37, 0.42, 5}, std::tuple{-0.8, 1.0, 4}}) {
    const GridSpec grid{a, b, N, 1.0};
    const auto samples = random_samples(grid, 100 + N);
    std::vector<oracle::cd> f;
    for (const auto& [k, v] : samples.values) f.push_back(v);
    const auto expected = oracle::coefficients(a, b, N, f, 0, N - 1);
    const auto beta = adft_forward(samples);
    std::size_t i = 0;
    for (const auto& [key, v] : beta.values) CHECK(std::abs(v - expected[i++]) < 1e-13);
  }
}

TEST_CASE("round trip and linearity") {
  for (const int N : {1, 2, 3, 5, 7, 9}) {
    const GridSpec grid{0.13 * N, 0.25, N, 1.0};
    const auto f = random_samples(grid, N);
    const auto g = random_samples(grid, 1000 + N);
    const auto bf = adft_forward(f);
    CHECK(max_diff(adft_inverse(bf).values, f.values) < 1e-10);

    const Complex alpha{0.3, -1.2}, gamma{2.0, 0.5};
    SampleSet mix{grid, {}};
    for (const auto& [k, v] : f.values) mix.values.emplace(k, alpha * v + gamma * g.values.at(k));
    const auto bm = adft_forward(mix);
    const auto bg = adft_forward(g);
    for (const auto& [k, v] : bm.values) CHECK(std::abs(v - (alpha * bf.values.at(k) + gamma * bg.values.at(k))) < 1e-12);
  }
}

TEST_CASE("inverse of deltas") {
  const GridSpec grid{0.0, 0.5, 4, 1.0};
  for (const IndexTriple t0 : {IndexTriple{0, 0, 0}, IndexTriple{2, 3, 1}, IndexTriple{3, 3, 3}}) {
    CoefficientSet beta{grid, CoefficientRole::beta, std::nullopt, {}};
    for (const auto& key : enumerate_domain({0, 3})) beta.values.emplace(key, key == t0 ? 1.0 : 0.0);
    const auto f = adft_inverse(beta);
    for (const auto& gp : grid_points(grid)) {
      const auto& p = gp.point;
      CHECK(std::abs(f.values.at(gp.index) - oracle::E(t0.k, t0.l, t0.m, p.x, p.y, p.z)) < 1e-12);
    }
  }
}

TEST_CASE("optimized and naive paths agree") {
  for (const int N : {2, 3, 6, 8}) {
    const GridSpec grid{0.31, 0.77, N, 1.0};
    const auto s = random_samples(grid, 7 * N);
    const auto fast = adft_forward(s);
    const auto slow = reference::adft_forward(s);
    CHECK(max_diff(fast.values, slow.values) < 1e-11);
    CHECK(max_diff(adft_inverse(fast).values, reference::adft_inverse(fast).values) < 1e-11);
  }
}

TEST_CASE("discrete gram") {
  const auto g1 = discrete_gram({0.0, 0.0, 1, 1.0});
  REQUIRE(g1.keys.size() == 1);
  CHECK(std::abs(g1(0, 0) - 3.0) < 1e-14);

  for (const auto& grid : {GridSpec{0.0, 0.0, 3, 1.0}, GridSpec{0.37, 0.42, 5, 1.0}}) {
    const auto g = discrete_gram(grid);
    const double volume = grid.N * grid.N * grid.N;
    for (std::size_t r = 0; r < g.keys.size(); ++r)
      for (std::size_t c = 0; c < g.keys.size(); ++c) {
        const double expected = r == c ? weight_g(g.keys[r]) * volume : 0.0;
        CHECK(std::abs(g(r, c) - expected) < 1e-9 * volume);
      }
  }
}

TEST_CASE("transform input errors") {
  const GridSpec grid{0.0, 0.0, 3, 1.0};
  auto s = random_samples(grid, 1);

  SUBCASE("missing key names the key") {
    s.values.erase(IndexTriple{2, 1, 0});
    try {
      adft_forward(s);
      FAIL("expected MissingEntryError");
    } catch (const MissingEntryError& e) {
      CHECK(e.key() == IndexTriple{2, 1, 0});
    }
  }
  SUBCASE("key outside the domain") {
    s.values.emplace(IndexTriple{0, 1, 2}, 1.0);
    CHECK_THROWS_AS(adft_forward(s), DimensionError);
  }
  SUBCASE("period other than 1") {
    s.grid.T = 2.0;
    CHECK_THROWS_AS(adft_forward(s), std::invalid_argument);
  }
  SUBCASE("inverse needs beta") {
    auto beta = adft_forward(s);
    beta.role = CoefficientRole::c_alt;
    CHECK_THROWS_AS(adft_inverse(beta), std::invalid_argument);
  }
}

TEST_CASE("role names") {
  for (const auto role : {CoefficientRole::beta, CoefficientRole::c_alt, CoefficientRole::c_std})
    CHECK(role_from_string(to_string(role)) == role);
  CHECK_THROWS_AS(role_from_string("gamma"), std::invalid_argument);
}
