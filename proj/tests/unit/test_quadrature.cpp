#include <doctest.h>

#include <cmath>
#include <numbers>

#include "altexp/alt_functions.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/reference.hpp"
#include "oracles.hpp"

using namespace altexp;

TEST_CASE("bump values") {
  const BumpParams bp;
  CHECK(bump(bp, bp.center) == 1.0);
  CHECK(bump(bp, bp.center + Point3{0.25, 0, 0}) == 0.0);
  CHECK(bump(bp, bp.center + Point3{0, 0, 0.2}) == 0.0);
  CHECK(bump(bp, bp.center + Point3{0, 0.15, 0}) == doctest::Approx(std::exp(-1.0 / 3.0)).epsilon(1e-12));
  CHECK(std::exp(-1.0 / 3.0) == doctest::Approx(0.71653).epsilon(1e-5));

  // Continuity at both radii.
  CHECK(std::abs(bump(bp, bp.center + Point3{0.1 + 1e-8, 0, 0}) - 1.0) < 1e-6);
  CHECK(bump(bp, bp.center + Point3{0.2 - 1e-8, 0, 0}) < 1e-6);

  CHECK_THROWS_AS((BumpParams{0.2, 0.1, {}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((BumpParams{0.0, 0.1, {}}).validate(), std::invalid_argument);
}

TEST_CASE("integration over F") {
  for (const int n : {32, 64, 128}) {
    const double vol = integrate_over_F([](const Point3&) { return 1.0; }, {n});
    CHECK(std::abs(vol - 1.0 / 3.0) < 3.0 / n);
  }
  CHECK(integrate_over_F([](const Point3&) { return 0.0; }, {16}) == 0.0);
  const Complex c = integrate_complex_over_F([](const Point3&) { return Complex{0.0, 3.0}; }, {64});
  CHECK(c.imag() == doctest::Approx(1.0).epsilon(0.05));
  CHECK_THROWS_AS(integrate_over_F([](const Point3&) { return 1.0; }, {0}), std::invalid_argument);

  // Polynomial integrand with a closed form: int_F z dV = int_0^1 z(1-z)^2 dz = 1/12.
  CHECK(integrate_over_F([](const Point3& p) { return p.z; }, {128}) == doctest::Approx(1.0 / 12.0).epsilon(0.03));
}

TEST_CASE("continuous orthogonality converges") {
  const IndexTriple zero{0, 0, 0};
  CHECK(std::abs(continuous_gram_entry(zero, zero, {64}) - 3.0) < 0.1);

  const double diag = std::abs(continuous_gram_entry({1, 1, 0}, {1, 1, 0}, {96}));
  CHECK(diag == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(continuous_gram_entry({2, 1, 0}, {2, 1, 0}, {96})) == doctest::Approx(1.0).epsilon(0.05));

  const double coarse = std::abs(continuous_gram_entry({1, 0, 0}, {2, 0, 0}, {32}));
  const double fine = std::abs(continuous_gram_entry({1, 0, 0}, {2, 0, 0}, {128}));
  CHECK(fine < coarse);
  CHECK(fine < 0.02);

  // Full Gram on a few labels is Hermitian.
  const std::vector<IndexTriple> labels = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}};
  const auto g = continuous_gram(labels, {48});
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      CHECK(std::abs(g[i * labels.size() + j] - std::conj(g[j * labels.size() + i])) < 1e-14);
}

TEST_CASE("interpolation error functional") {
  const GridSpec grid{0.0, 0.5, 5, 1.0};
  const BumpParams bp;
  const auto interp = alt_interpolate_direct(
      SampleSet::from_function(grid, [&](const Point3& p) { return Complex{bump(bp, p)}; }));

  // f = psi itself: only rounding remains. E_(1,0,-1) and E_(0,1,-1) are
  // conjugates, so half of each gives a real psi.
  InterpolantAlt real_psi{1, 1.0, {{0.0, 0.0, 3, 1.0}, CoefficientRole::c_alt, 1, {}}};
  for (const auto& key : enumerate_domain({-1, 1})) real_psi.coeffs.values.emplace(key, 0.0);
  real_psi.coeffs.values[{1, 0, -1}] = 0.5;
  real_psi.coeffs.values[{0, 1, -1}] = 0.5;
  const double self = interpolation_error(
      [](const Point3& p) { return oracle::E(1, 0, -1, p.x, p.y, p.z).real(); }, real_psi, {32});
  CHECK(self < 1e-25);

  auto f = [&](const Point3& p) { return bump(bp, p); };
  const double fast = interpolation_error(f, interp, {40});
  const double slow = reference::interpolation_error(f, interp, {40});
  CHECK(fast == doctest::Approx(slow).epsilon(1e-12));

  const double e7 = bump_interpolation_error(7, bp, {96}).error;
  const double e15 = bump_interpolation_error(15, bp, {96}).error;
  const double e31 = bump_interpolation_error(31, bp, {128}).error;
  CHECK(e7 > e15);
  CHECK(e15 > e31);
}
