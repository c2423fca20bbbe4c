#include "altexp/alt_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace altexp {

namespace {

// Fractional part in [0,1). Integer labels only see coordinates modulo 1.
double frac(double v) { return v - std::floor(v); }

// k*u mod 1 with k integer and u in [0,1); exact enough to keep the
// periodicity residual at rounding level.
double turns(int k, double u) {
  const double t = static_cast<double>(k) * u;
  return t - std::nearbyint(t);
}

}  // namespace

Complex eval_E(const IndexTriple& t, const Point3& p) {
  const double x = frac(p.x);
  const double y = frac(p.y);
  const double z = frac(p.z);
  return cis_turns(turns(t.k, x) + turns(t.l, y) + turns(t.m, z)) +
         cis_turns(turns(t.k, z) + turns(t.l, x) + turns(t.m, y)) +
         cis_turns(turns(t.k, y) + turns(t.l, z) + turns(t.m, x));
}

Complex eval_E(const LabelTriple& t, const Point3& p) {
  return cis_turns(t.k * p.x + t.l * p.y + t.m * p.z) + cis_turns(t.k * p.z + t.l * p.x + t.m * p.y) +
         cis_turns(t.k * p.y + t.l * p.z + t.m * p.x);
}

Complex shift_phase(const IndexTriple& t, double a) {
  const long long total = static_cast<long long>(t.k) + t.l + t.m;
  return cis_turns(static_cast<double>(total) * frac(a));
}

double point_product_residual(const LabelTriple& t, const Point3& p, const Point3& q) {
  const Complex lhs = eval_E(t, p) * eval_E(t, q);
  const Complex rhs = eval_E(t, Point3{p.x + q.x, p.y + q.y, p.z + q.z}) +
                      eval_E(t, Point3{p.x + q.y, p.y + q.z, p.z + q.x}) +
                      eval_E(t, Point3{p.x + q.z, p.y + q.x, p.z + q.y});
  return std::abs(lhs - rhs);
}

double sigma(int k, double y1, double y2, double y3) {
  switch (k) {
    case 1:
      return y1 + y2 + y3;
    case 2:
      return y1 * y2 + y1 * y3 + y2 * y3;
    case 3:
      return y1 * y2 * y3;
    default:
      throw std::invalid_argument("sigma_k defined for k in {1,2,3}, got " + std::to_string(k));
  }
}

double operator_eigenvalue(int k, const LabelTriple& t) {
  const double s = sigma(k, t.k * t.k, t.l * t.l, t.m * t.m);
  const double base = -4.0 * std::numbers::pi * std::numbers::pi;
  return std::pow(base, k) * s;
}

}  // namespace altexp
