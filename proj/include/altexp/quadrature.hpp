#pragma once

#include <functional>
#include <span>
#include <vector>

#include "altexp/interpolation.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// Smooth characteristic function of a ball: 1 inside radius alpha, 0 beyond
/// beta, e * exp(1/(q^2-1)) with q = (r-alpha)/(beta-alpha) in between.
struct BumpParams {
  double alpha = 0.1;
  double beta = 0.2;
  Point3 center{0.75, 0.75, 0.25};

  /// Throws std::invalid_argument unless 0 < alpha < beta.
  void validate() const;
};

double bump(const BumpParams& params, const Point3& p);

/// Midpoint rule on n^3 cells of the unit cube, keeping cells whose centre
/// lies in F.
struct QuadratureSpec {
  int n = 128;
};

using RealFunction = std::function<double(const Point3&)>;
using ComplexFunction = std::function<Complex(const Point3&)>;

/// Integral over F. Parallel over z-planes, pairwise summation within and
/// across planes; the result does not depend on the thread count.
double integrate_over_F(const RealFunction& fn, QuadratureSpec q);
Complex integrate_complex_over_F(const ComplexFunction& fn, QuadratureSpec q);

/// Integral over F of |f - psi^A|^2, psi^A evaluated plane-by-plane through
/// the separable kernel.
double interpolation_error(const RealFunction& f, const InterpolantAlt& interp, QuadratureSpec q);

/// Integral over F of E_t conj(E_t'); tends to G_t delta as n grows.
Complex continuous_gram_entry(const IndexTriple& t, const IndexTriple& t2, QuadratureSpec q);

/// All entries for a list of labels at once, row-major.
std::vector<Complex> continuous_gram(std::span<const IndexTriple> labels, QuadratureSpec q);

/// Alternating interpolation of the bump sampled on L_{a,b,N,1}, and its
/// error functional over F.
struct ErrorTableRow {
  int N = 0;
  double error = 0.0;
};

ErrorTableRow bump_interpolation_error(int N, const BumpParams& params, QuadratureSpec q,
                                       double a = 0.0, double b = 0.5);

}  // namespace altexp
