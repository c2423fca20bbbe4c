#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "altexp/types.hpp"

namespace altexp {

/// e^{2 pi i turns}, with turns reduced to [-1/2, 1/2] before the sincos.
inline Complex cis_turns(double turns) {
  const double r = turns - std::nearbyint(turns);
  const double angle = 2.0 * std::numbers::pi * r;
  return {std::cos(angle), std::sin(angle)};
}

/// Alternating exponential function
///   E_(k,l,m)(x,y,z) = e(kx+ly+mz) + e(kz+lx+my) + e(ky+lz+mx),  e(u) = e^{2 pi i u}.
/// Integer labels reduce every coordinate modulo 1 first, so integer
/// translations of the argument leave the result unchanged to rounding.
Complex eval_E(const IndexTriple& t, const Point3& p);
Complex eval_E(const LabelTriple& t, const Point3& p);

/// Phase picked up along the diagonal: E(p + (a,a,a)) = shift_phase(t,a) E(p).
Complex shift_phase(const IndexTriple& t, double a);

/// Labels of E_t * E_t' = E_{terms[0]} + E_{terms[1]} + E_{terms[2]}, in the
/// order (l+l', m+m', n+n'), (l+m', m+n', n+l'), (l+n', m+l', n+m').
/// The terms are not canonicalized.
template <typename T>
struct ProductDecomposition {
  std::array<Triple<T>, 3> terms;
};

template <typename T>
constexpr ProductDecomposition<T> product_indices(const Triple<T>& a, const Triple<T>& b) {
  return {{{
      {a.k + b.k, a.l + b.l, a.m + b.m},
      {a.k + b.l, a.l + b.m, a.m + b.k},
      {a.k + b.m, a.l + b.k, a.m + b.l},
  }}};
}

/// |E_t(p) E_t(q) - [E_t(p+q) + E_t(x+y',y+z',z+x') + E_t(x+z',y+x',z+y')]|.
double point_product_residual(const LabelTriple& t, const Point3& p, const Point3& q);

/// Elementary symmetric polynomial of degree k in three variables.
/// Throws std::invalid_argument for k outside {1,2,3}.
double sigma(int k, double y1, double y2, double y3);

/// Eigenvalue of sigma_k(d_xx, d_yy, d_zz) on E_t: (-4 pi^2)^k sigma_k(l^2, m^2, n^2).
/// k = 1 is the Laplacian.
double operator_eigenvalue(int k, const LabelTriple& t);
inline double operator_eigenvalue(int k, const IndexTriple& t) {
  return operator_eigenvalue(k, to_label(t));
}

}  // namespace altexp
