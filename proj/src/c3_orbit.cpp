#include "altexp/c3_orbit.hpp"

#include <algorithm>
#include <set>

#include "altexp/alt_functions.hpp"
#include "altexp/errors.hpp"

namespace altexp::c3 {

namespace {

using IntMatrix = std::array<std::array<int, 3>, 3>;

// Generic W^e(C_3) orbit, omega basis. Row i holds the coefficients of
// (v1,v2,v3) in coordinate i of the weight.
constexpr std::array<IntMatrix, 24> kOrbitTable = {{
    // l = 0
    {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
    // l = 2
    {{{-1, -1, 0}, {1, 0, 0}, {0, 1, 1}}},
    {{{0, 1, 0}, {-1, -1, 0}, {1, 1, 1}}},
    {{{-1, 0, 0}, {1, 1, 2}, {0, 0, -1}}},
    {{{1, 1, 2}, {0, -1, -2}, {0, 1, 1}}},
    {{{1, 1, 0}, {0, 1, 2}, {0, -1, -1}}},
    // l = 4
    {{{-1, -2, -2}, {1, 1, 0}, {0, 0, 1}}},
    {{{0, -1, -2}, {-1, 0, 0}, {1, 1, 1}}},
    {{{-1, -1, -2}, {1, 2, 2}, {0, -1, -1}}},
    {{{0, 1, 2}, {-1, -2, -2}, {1, 1, 1}}},
    {{{0, -1, 0}, {1, 2, 2}, {-1, -1, -1}}},
    {{{1, 2, 2}, {-1, -1, -2}, {0, 0, 1}}},
    {{{0, 1, 2}, {1, 1, 0}, {-1, -1, -1}}},
    {{{1, 2, 2}, {0, -1, 0}, {0, 0, -1}}},
    // l = 6
    {{{0, -1, 0}, {-1, -1, -2}, {1, 1, 1}}},
    {{{0, -1, -2}, {1, 1, 2}, {-1, -1, -1}}},
    {{{-1, -1, -2}, {0, -1, 0}, {0, 1, 1}}},
    {{{-1, -2, -2}, {0, 1, 2}, {0, 0, -1}}},
    {{{0, 1, 0}, {1, 0, 0}, {-1, -1, -1}}},
    {{{1, 1, 0}, {-1, -2, -2}, {0, 1, 1}}},
    {{{1, 1, 2}, {-1, 0, 0}, {0, -1, -1}}},
    // l = 8
    {{{1, 0, 0}, {-1, -1, 0}, {0, 0, -1}}},
    {{{-1, 0, 0}, {0, -1, -2}, {0, 0, 1}}},
    {{{-1, -1, 0}, {0, 1, 0}, {0, -1, -1}}},
}};

// One exponential of the expanded E^W: e(sx*x*label[ix] + sy*y*label[iy] + sz*z*label[iz]),
// label = (lambda, mu, nu).
struct ExpandedTerm {
  int sx, ix, sy, iy, sz, iz;
};

constexpr int L = 0;  // lambda
constexpr int U = 1;  // mu
constexpr int V = 2;  // nu

constexpr std::array<ExpandedTerm, 24> kExpandedTerms = {{
    {-1, V, -1, U, -1, L}, {-1, V, +1, U, +1, L}, {-1, V, +1, L, -1, U}, {-1, V, -1, L, +1, U},
    {+1, V, -1, U, +1, L}, {+1, V, +1, U, -1, L}, {+1, V, -1, L, -1, U}, {+1, V, +1, L, +1, U},
    {-1, U, -1, V, +1, L}, {+1, U, -1, V, -1, L}, {-1, L, -1, V, -1, U}, {+1, L, -1, V, +1, U},
    {-1, U, +1, V, -1, L}, {+1, U, +1, V, +1, L}, {+1, L, +1, V, -1, U}, {-1, L, +1, V, +1, U},
    {-1, U, -1, L, -1, V}, {+1, U, +1, L, -1, V}, {+1, L, -1, U, -1, V}, {-1, L, +1, U, -1, V},
    {-1, U, +1, L, +1, V}, {+1, U, -1, L, +1, V}, {-1, L, -1, U, +1, V}, {+1, L, +1, U, +1, V},
}};

Weight apply(const IntMatrix& m, const Weight& w) {
  Weight out;
  for (int i = 0; i < 3; ++i)
    out.v[i] = m[i][0] * w.v[0] + m[i][1] * w.v[1] + m[i][2] * w.v[2];
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Cartesian coordinates of omega-basis weights: c = C v.
constexpr IntMatrix kOmegaToCartesian = {{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}};
constexpr IntMatrix kCartesianToOmega = {{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}};

// Breadth-first closure; stops once more than `limit` elements are found.
template <typename Matrix, typename Multiply>
std::vector<Matrix> close_under(const std::vector<Matrix>& generators, const Matrix& identity, std::size_t limit,
                                Multiply mul) {
  std::set<Matrix> seen{identity};
  std::vector<Matrix> order{identity};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& g : generators) {
      const Matrix next = mul(order[i], g);
      if (seen.insert(next).second) {
        order.push_back(next);
        if (order.size() > limit) return order;
      }
    }
  }
  return order;
}

}  // namespace

SignedPermutation SignedPermutation::identity() { return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  return {c3::multiply(m, rhs.m)};
}

Point3 SignedPermutation::apply(const Point3& p) const {
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z, m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
}

int SignedPermutation::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool SignedPermutation::is_signed_permutation() const {
  for (int i = 0; i < 3; ++i) {
    int row = 0;
    int col = 0;
    for (int j = 0; j < 3; ++j) {
      if (m[i][j] < -1 || m[i][j] > 1) return false;
      row += m[i][j] != 0;
      col += m[j][i] != 0;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

std::array<Weight, 24> we_orbit(const Weight& v) {
  std::array<Weight, 24> out;
  for (std::size_t i = 0; i < kOrbitTable.size(); ++i) out[i] = apply(kOrbitTable[i], v);
  return out;
}

SignedPermutation simple_reflection(int j) {
  // r(x) = x - 2 <alpha,x>/<alpha,alpha> alpha; the 1/2 in <e_i,e_j> cancels.
  static constexpr std::array<std::array<int, 3>, 3> roots = {{{1, -1, 0}, {0, 1, -1}, {0, 0, 2}}};
  if (j < 1 || j > 3) throw std::invalid_argument("simple reflection index must be 1, 2 or 3");
  const auto& a = roots[static_cast<std::size_t>(j - 1)];
  const int norm = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  SignedPermutation r = SignedPermutation::identity();
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col) r.m[row][col] -= 2 * a[row] * a[col] / norm;
  return r;
}

std::vector<Weight> we_orbit_by_reflections(const Weight& v) {
  std::vector<IntMatrix> generators;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) {
        const auto rot = (simple_reflection(i) * simple_reflection(j)).m;
        generators.push_back(multiply(multiply(kCartesianToOmega, rot), kOmegaToCartesian));
      }
  const IntMatrix identity = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const auto group = close_under(generators, identity, 24, [](const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); });
  std::vector<Weight> out;
  out.reserve(group.size());
  for (const auto& g : group) out.push_back(apply(g, v));
  return out;
}

double scalar_product(const Weight& v, const Coweight& theta) {
  const auto& [v1, v2, v3] = v.v;
  const auto& [t1, t2, t3] = theta.theta;
  return (v1 + v2 + v3) * t1 + (v1 + 2.0 * v2 + 2.0 * v3) * t2 + (0.5 * v1 + v2 + 1.5 * v3) * t3;
}

Complex eval_EW(const Weight& v, const Coweight& theta) {
  Complex acc{};
  for (const auto& w : we_orbit(v)) acc += cis_turns(scalar_product(w, theta));
  return acc;
}

Complex eval_EW_expanded(const LabelTriple& t, const Point3& p) {
  const std::array<double, 3> label = {t.k, t.l, t.m};
  Complex acc{};
  for (const auto& term : kExpandedTerms)
    acc += cis_turns(term.sx * p.x * label[static_cast<std::size_t>(term.ix)] +
                     term.sy * p.y * label[static_cast<std::size_t>(term.iy)] +
                     term.sz * p.z * label[static_cast<std::size_t>(term.iz)]);
  return acc;
}

Weight weight_from_label(const LabelTriple& t) { return {{t.k - t.l, t.l - t.m, t.m}}; }

Coweight coweight_from_point(const Point3& p) { return {{p.x - p.y, p.y - p.z, 2.0 * p.z}}; }

const std::vector<SignedPermutation>& tilde_we() {
  static const std::vector<SignedPermutation> group = [] {
    const auto r1 = simple_reflection(1);
    const auto r2 = simple_reflection(2);
    const auto r3 = simple_reflection(3);
    const auto r23 = r2 * r3;
    const std::vector<SignedPermutation> generators = {r1 * r3, r23 * r23};
    auto elements = close_under(generators, SignedPermutation::identity(), 8,
                                [](const SignedPermutation& a, const SignedPermutation& b) { return a * b; });
    if (elements.size() != 8)
      throw Error("closure of the order-8 subgroup generators has " + std::to_string(elements.size()) +
                  " elements");
    std::sort(elements.begin(), elements.end());
    return elements;
  }();
  return group;
}

double symmetrization_residual(const LabelTriple& t, const Point3& p) {
  const Complex lhs = eval_EW(weight_from_label(t), coweight_from_point(p));
  Complex rhs{};
  for (const auto& w : tilde_we()) rhs += eval_E(t, w.apply(p));
  return std::abs(lhs - rhs);
}

}  // namespace altexp::c3
