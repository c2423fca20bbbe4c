#pragma once

#include <compare>
#include <complex>
#include <ostream>

namespace altexp {

using Complex = std::complex<double>;

/// Label (k,l,m) of an alternating exponential function. Integer labels are
/// the ones that take part in orthogonality and the discrete transforms;
/// real labels are accepted by evaluation only.
template <typename T>
struct Triple {
  T k{};
  T l{};
  T m{};

  friend constexpr bool operator==(const Triple&, const Triple&) = default;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

using IndexTriple = Triple<int>;
using LabelTriple = Triple<double>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Triple<T>& t) {
  return os << '(' << t.k << ',' << t.l << ',' << t.m << ')';
}

inline LabelTriple to_label(const IndexTriple& t) {
  return {static_cast<double>(t.k), static_cast<double>(t.l), static_cast<double>(t.m)};
}

/// Point in R^3, coordinates in units of the period.
struct Point3 {
  double x{};
  double y{};
  double z{};

  friend constexpr bool operator==(const Point3&, const Point3&) = default;

  constexpr Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Point3 operator/(double s) const { return {x / s, y / s, z / s}; }
};

inline std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

/// Cyclic rotations: (x,y,z) -> (z,x,y).
constexpr Point3 rotate(const Point3& p) { return {p.z, p.x, p.y}; }

template <typename T>
constexpr Triple<T> rotate(const Triple<T>& t) {
  return {t.m, t.k, t.l};
}

/// Parameters of the shifted lattice L_{a,b,N,T}: point (r,s,t) sits at
/// a + (r+b)T/N along each axis.
struct GridSpec {
  double a = 0.0;
  double b = 0.0;
  int N = 1;
  double T = 1.0;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  /// Throws std::invalid_argument unless N >= 1, 0 <= b <= 1 and T > 0.
  void validate() const;

  /// Coordinate of lattice index i along any axis.
  double coordinate(int i) const { return a + (i + b) * T / N; }
};

}  // namespace altexp
