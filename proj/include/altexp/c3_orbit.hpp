#pragma once

#include <array>
#include <vector>

#include "altexp/types.hpp"

namespace altexp::c3 {

/// Weight coordinates (v1,v2,v3) in the omega basis of C_3:
/// omega_1 = e1, omega_2 = e1+e2, omega_3 = e1+e2+e3.
struct Weight {
  std::array<double, 3> v{};
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Point coordinates (theta1,theta2,theta3) in the dual omega-check basis:
/// 2e1, 2e1+2e2, e1+e2+e3.
struct Coweight {
  std::array<double, 3> theta{};
};

/// 3x3 signed permutation matrix acting on Cartesian (x,y,z).
struct SignedPermutation {
  std::array<std::array<int, 3>, 3> m{};

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

  static SignedPermutation identity();
  SignedPermutation operator*(const SignedPermutation& rhs) const;
  Point3 apply(const Point3& p) const;
  int determinant() const;
  bool is_signed_permutation() const;
};

/// The 24 weights of the generic W^e(C_3) orbit of v, in the listed order
/// (grouped by minimal reflection count 0, 2, 4, 6, 8).
std::array<Weight, 24> we_orbit(const Weight& v);

/// The same orbit generated by closing {r_i r_j} over the simple reflections,
/// in generation order. Used to cross-check the listed table.
std::vector<Weight> we_orbit_by_reflections(const Weight& v);

/// <v, theta> = (v1+v2+v3) t1 + (v1+2v2+2v3) t2 + (v1/2+v2+3v3/2) t3.
double scalar_product(const Weight& v, const Coweight& theta);

/// E-function of C_3: sum over the 24 orbit weights of e(<w v, theta>).
Complex eval_EW(const Weight& v, const Coweight& theta);

/// E^W after the substitution v = (l-m, m-n, n), theta = (x-y, y-z, 2z),
/// summed term by term as the 24 explicit exponentials in (x,y,z).
Complex eval_EW_expanded(const LabelTriple& t, const Point3& p);

Weight weight_from_label(const LabelTriple& t);
Coweight coweight_from_point(const Point3& p);

/// Reflection r_{alpha_j} (j = 1..3) in Cartesian e-coordinates, built from
/// alpha1 = e1-e2, alpha2 = e2-e3, alpha3 = 2e3.
SignedPermutation simple_reflection(int j);

/// Closure of {r1 r3, (r2 r3)^2}. Throws altexp::Error unless the closure has
/// exactly 8 elements. Computed once; sorted.
const std::vector<SignedPermutation>& tilde_we();

/// |E^W_{(l-m,m-n,n)}(x-y,y-z,2z) - sum_{w in tilde_we} E_(l,m,n)(w p)|.
double symmetrization_residual(const LabelTriple& t, const Point3& p);

}  // namespace altexp::c3
