#pragma once

// Serial implementations that evaluate the defining sums term by term with
// eval_E. Quadratic in the grid size; kept as oracles for the parallel
// kernels and selectable from the CLI with --naive.

#include "altexp/interpolation.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/transform.hpp"

namespace altexp::reference {

CoefficientSet adft_forward(const SampleSet& samples);
SampleSet adft_inverse(const CoefficientSet& beta);
InterpolantAlt alt_interpolate_direct(const SampleSet& samples);
InterpolantStd std_interpolate(const CubeSampleSet& samples);

/// Same quadrature as altexp::interpolation_error, with psi^A summed directly
/// at every cell centre and plain sequential accumulation.
double interpolation_error(const RealFunction& f, const InterpolantAlt& interp, QuadratureSpec q);

}  // namespace altexp::reference
