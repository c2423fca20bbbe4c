#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "altexp/interpolation.hpp"
#include "altexp/transform.hpp"
#include "altexp/verify.hpp"

namespace altexp::io {

/// %.17g.
std::string format_double(double value);

/// Header r,s,t,x,y,z; one row per grid point in enumeration order.
void write_grid_csv(std::ostream& out, const GridSpec& grid);

/// Header r,s,t,re,im.
void write_samples_csv(std::ostream& out, const SampleSet& samples);
void write_cube_samples_csv(std::ostream& out, const CubeSampleSet& samples);

/// Parses r,s,t,re,im rows. `grid` supplies a, b, T; N is inferred as
/// max(index)+1 unless `expected_N` is given, in which case a mismatch is a
/// DimensionError. Malformed rows raise ParseError with the 1-based line.
SampleSet read_samples_csv(std::istream& in, const std::string& source, GridSpec grid,
                           std::optional<int> expected_N = std::nullopt);
CubeSampleSet read_cube_samples_csv(std::istream& in, const std::string& source, GridSpec grid,
                                    std::optional<int> expected_N = std::nullopt);

/// {"N","M","a","b","T","role","coeffs":[{"k","l","m","re","im"}...]} in
/// enumeration order; M is null for beta.
void write_coefficients_json(std::ostream& out, const CoefficientSet& coeffs);
CoefficientSet read_coefficients_json(std::istream& in, const std::string& source);

/// Header x,y,re,im; xs slowest.
void write_slice_csv(std::ostream& out, std::span<const double> xs, std::span<const double> ys,
                     std::span<const Complex> values);

void write_report_json(std::ostream& out, const verify::Report& report, std::uint64_t seed);

}  // namespace altexp::io
