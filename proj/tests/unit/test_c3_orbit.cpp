#include <doctest.h>

#include <algorithm>

#include "altexp/alt_functions.hpp"
#include "altexp/c3_orbit.hpp"
#include "oracles.hpp"

using namespace altexp;
using namespace altexp::c3;

namespace {

bool same(const Weight& a, const std::array<double, 3>& b) {
  return std::abs(a.v[0] - b[0]) < 1e-15 && std::abs(a.v[1] - b[1]) < 1e-15 && std::abs(a.v[2] - b[2]) < 1e-15;
}

}  // namespace

TEST_CASE("orbit table entries") {
  CHECK(same(we_orbit({{0.3, -1.2, 2.5}})[0], {0.3, -1.2, 2.5}));
  CHECK(same(we_orbit({{1, 0, 0}})[1], {-1, 1, 0}));
  CHECK(same(we_orbit({{1, 1, 1}})[23], {-2, 1, -2}));
}

TEST_CASE("orbit table agrees with the reflection-generated orbit") {
  const Weight v{{0.31, 0.57, 0.83}};
  const auto table = we_orbit(v);
  const auto generated = we_orbit_by_reflections(v);
  REQUIRE(generated.size() == 24);
  for (const auto& w : table) {
    const bool found = std::any_of(generated.begin(), generated.end(), [&](const Weight& g) {
      return std::abs(g.v[0] - w.v[0]) < 1e-12 && std::abs(g.v[1] - w.v[1]) < 1e-12 && std::abs(g.v[2] - w.v[2]) < 1e-12;
    });
    CHECK(found);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j) CHECK_FALSE(table[i] == table[j]);
}

TEST_CASE("scalar product") {
  CHECK(scalar_product({{1, 0, 0}}, {{1, 0, 0}}) == 1.0);
  CHECK(scalar_product({{0, 0, 0}}, {{0.4, 1, 2}}) == 0.0);
  CHECK(scalar_product({{1, 2, 3}}, {{0, 0, 0}}) == 0.0);
  CHECK(scalar_product({{0, 0, 1}}, {{0, 0, 1}}) == 1.5);
  // Change of variables turns the pairing into lambda x + mu y + nu z.
  const LabelTriple t{1.5, -0.5, 2.0};
  const Point3 p{0.2, 0.7, -0.3};
  CHECK(scalar_product(weight_from_label(t), coweight_from_point(p)) ==
        doctest::Approx(t.k * p.x + t.l * p.y + t.m * p.z));
}

TEST_CASE("E^W evaluation") {
  CHECK(std::abs(eval_EW({{0, 0, 0}}, {{0.3, 0.1, 0.2}}) - 24.0) < 1e-13);
  CHECK(std::abs(eval_EW({{0.3, 0.1, 0.2}}, {{0, 0, 0}}) - 24.0) < 1e-13);
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> lab(-4.0, 4.0);
  std::uniform_real_distribution<double> pt(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const LabelTriple t{lab(rng), lab(rng), lab(rng)};
    const Point3 p{pt(rng), pt(rng), pt(rng)};
    CHECK(std::abs(eval_EW(weight_from_label(t), coweight_from_point(p)) - eval_EW_expanded(t, p)) < 1e-11);
  }
}

TEST_CASE("simple reflections") {
  const auto r1 = simple_reflection(1);
  const auto r3 = simple_reflection(3);
  CHECK(r1.apply({1, 2, 3}) == Point3{2, 1, 3});
  CHECK(r3.apply({1, 2, 3}) == Point3{1, 2, -3});
  CHECK((r1 * r3).apply({1, 2, 3}) == Point3{2, 1, -3});
  for (int j = 1; j <= 3; ++j) {
    CHECK(simple_reflection(j).determinant() == -1);
    CHECK(simple_reflection(j) * simple_reflection(j) == SignedPermutation::identity());
  }
  CHECK_THROWS_AS(simple_reflection(4), std::invalid_argument);
}

TEST_CASE("order-8 subgroup") {
  const auto& group = tilde_we();
  REQUIRE(group.size() == 8);
  CHECK(std::find(group.begin(), group.end(), SignedPermutation::identity()) != group.end());
  for (const auto& g : group) {
    CHECK(g.is_signed_permutation());
    CHECK(g.determinant() == 1);
    for (const auto& h : group) CHECK(std::find(group.begin(), group.end(), g * h) != group.end());
  }
}

TEST_CASE("symmetrization identity") {
  CHECK(symmetrization_residual({0, 0, 0}, {0.3, 0.2, 0.9}) < 1e-13);
  CHECK(symmetrization_residual({1.5, 2.0, -3.0}, {0, 0, 0}) < 1e-13);
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> lab(-4.0, 4.0);
  std::uniform_real_distribution<double> pt(-1.0, 1.0);
  for (int i = 0; i < 100; ++i)
    CHECK(symmetrization_residual({lab(rng), lab(rng), lab(rng)}, {pt(rng), pt(rng), pt(rng)}) < 1e-10);

  // Oracle form: sum over the 8 maps of the direct three-term E.
  const LabelTriple t{1.25, -2.0, 0.5};
  const Point3 p{0.4, -0.1, 0.7};
  oracle::cd rhs = 0;
  for (const auto& g : tilde_we()) {
    const auto q = g.apply(p);
    rhs += oracle::E(t.k, t.l, t.m, q.x, q.y, q.z);
  }
  CHECK(std::abs(eval_EW_expanded(t, p) - rhs) < 1e-11);
}
