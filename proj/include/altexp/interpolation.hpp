#pragma once

#include <vector>

#include "altexp/kernels.hpp"
#include "altexp/transform.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// psi^A(p) = sum_{(k,l,m) in D^e_+(-M,M)} c_klm E_klm(p / period).
struct InterpolantAlt {
  int M = 0;
  double period = 1.0;
  CoefficientSet coeffs;  // role c_alt
};

/// psi(p) = sum_{k,l,m=-M..M} c_klm e(k x/T) e(l y/T) e(m z/T).
struct InterpolantStd {
  int M = 0;
  double period = 1.0;
  GridSpec origin;
  std::vector<Complex> coeffs;  // (2M+1)^3, k slowest, m fastest

  Complex coefficient(int k, int l, int m) const;
};

/// Function values on the full N^3 cube lattice, r slowest, t fastest.
struct CubeSampleSet {
  GridSpec grid;
  std::vector<Complex> values;

  template <typename Fn>
  static CubeSampleSet from_function(const GridSpec& grid, Fn&& fn) {
    CubeSampleSet s{grid, {}};
    s.values.reserve(static_cast<std::size_t>(grid.N) * grid.N * grid.N);
    for (int r = 0; r < grid.N; ++r)
      for (int q = 0; q < grid.N; ++q)
        for (int t = 0; t < grid.N; ++t)
          s.values.push_back(fn(Point3{grid.coordinate(r), grid.coordinate(q), grid.coordinate(t)}));
    return s;
  }
};

/// |D^e_+(-M,M)| = (2M+1)(4M^2+4M+3)/3.
constexpr std::size_t alt_coefficient_count(int M) {
  const auto m = static_cast<std::size_t>(M);
  return (2 * m + 1) * (4 * m * m + 4 * m + 3) / 3;
}

/// Unique alternating interpolant through the samples, coefficients by the
/// direct orthogonality sum. N must be odd (ParityError) and T = 1.
InterpolantAlt alt_interpolate_direct(const SampleSet& samples);

/// Where the coefficient c_klm comes from in the beta set of the same grid.
/// `region` is 1..6 for the six sign cases (0 <= k,l,m first); `negatives`
/// counts the entries shifted by N.
struct RemapSource {
  int region = 0;
  IndexTriple source;
  int negatives = 0;
};

/// Throws std::invalid_argument if t is not in D^e_+(-M,M).
RemapSource remap_source(const IndexTriple& t, int M);

/// c_alt from the ADFT coefficients of the same samples:
///   c_klm = e(j (N a + b)) beta_source, j = remap_source(...).negatives.
/// The phase is 1 on grids with N a + b integral. Throws DimensionError if
/// beta is not keyed over D^e_+(0, 2M).
CoefficientSet remap_beta_to_c(const CoefficientSet& beta, int M);

/// Direct sum over the coefficient set.
Complex eval_psi_alt(const InterpolantAlt& interp, const Point3& p);

/// Standard tensor-product trigonometric interpolant on L~_{a,b,N,T}.
/// N must be odd.
InterpolantStd std_interpolate(const CubeSampleSet& samples);
Complex eval_psi_std(const InterpolantStd& interp, const Point3& p);

/// Interpolant on the period-T domain: result(p) == interp(p / T).
/// Throws std::invalid_argument for T <= 0.
InterpolantAlt rescale_to_period(const InterpolantAlt& interp, double T);
InterpolantStd rescale_to_period(const InterpolantStd& interp, double T);

/// Coefficient-set views for serialization; the grid's T carries the period.
CoefficientSet to_coefficient_set(const InterpolantStd& interp);
CoefficientSet to_coefficient_set(const InterpolantAlt& interp);
InterpolantStd std_from_coefficient_set(const CoefficientSet& coeffs);
InterpolantAlt alt_from_coefficient_set(const CoefficientSet& coeffs);

/// psi^A as a tensor-product coefficient cube over [-M,M]^3 (period 1).
kernels::DenseCube dense_coefficients(const InterpolantAlt& interp);

/// psi^A on the tensor grid xs x ys x zs (coordinates on the period-T domain),
/// z fastest. Uses the separable kernels.
std::vector<Complex> eval_psi_alt_tensor(const InterpolantAlt& interp, std::span<const double> xs,
                                         std::span<const double> ys, std::span<const double> zs);

}  // namespace altexp
