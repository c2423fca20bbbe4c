#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altexp/types.hpp"

namespace altexp::verify {

struct Options {
  std::uint64_t seed = 42;
  int instances = 100;
  /// Perturb one entry of the beta -> c_alt remap before comparing it with
  /// the direct coefficients (mutation test of the remap check).
  bool inject_remap_fault = false;
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Finite-difference step of the differential-operator check.
inline constexpr double kFdStep = 1e-3;

/// sigma_k(d_xx, d_yy, d_zz) E_t at p by tensor central differences with step
/// h, evaluated in quad precision so truncation dominates the error.
Complex fd_sigma_operator(int k, const IndexTriple& t, const Point3& p, double h = kFdStep);

/// Relative error of fd_sigma_operator against operator_eigenvalue * eval_E.
/// Labels with vanishing eigenvalue are measured against |E| instead.
double fd_operator_relative_error(int k, const IndexTriple& t, const Point3& p);

/// Symmetries, translations, product rules, operator eigenvalues, discrete
/// orthogonality, the transform round trip and the interpolation
/// proposition. Deterministic for a given seed.
Report run_identity_suite(const Options& options);

/// Table 1 vs reflection orbit, the order-8 subgroup, the expanded E^W
/// display and the symmetrization identity.
Report run_c3_suite(const Options& options);

}  // namespace altexp::verify
