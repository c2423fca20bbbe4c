#pragma once

// Data-parallel separable kernels. Every trigonometric sum of the library is
// a tensor-product sum sum_{f1,f2,f3} C[f1][f2][f3] e(f1 x) e(f2 y) e(f3 z),
// so it factors through one 1D phase table per axis. Serial oracles for
// these live in altexp/reference.hpp.

#include <cstddef>
#include <span>
#include <vector>

#include "altexp/types.hpp"

namespace altexp::kernels {

/// Table of e(sign * f * x_i) for coordinates x_i and frequencies f in [lo, hi].
class PhaseTable {
 public:
  /// Lattice coordinates x_r = a + (r+b)/N, r = 0..N-1 (T = 1). Entries are
  /// e(f(a + b/N)) * w^{fr mod N}, w the N-th root of unity, so each of the
  /// N roots is computed once.
  static PhaseTable lattice(const GridSpec& grid, int lo, int hi, bool conjugate = false);

  /// Arbitrary coordinates.
  static PhaseTable points(std::span<const double> xs, int lo, int hi, bool conjugate = false);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t freq_count() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  std::size_t point_count() const { return points_; }

  /// Phase for point i and frequency lo + j.
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * freq_count() + j]; }
  const Complex* row(std::size_t i) const { return data_.data() + i * freq_count(); }

 private:
  PhaseTable(int lo, int hi, std::size_t points);

  int lo_;
  int hi_;
  std::size_t points_;
  std::vector<Complex> data_;
};

/// Coefficients over the frequency cube [lo, hi]^3, f3 fastest.
class DenseCube {
 public:
  DenseCube(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t side() const { return side_; }

  Complex& at(int f1, int f2, int f3) { return data_[offset(f1, f2, f3)]; }
  Complex at(int f1, int f2, int f3) const { return data_[offset(f1, f2, f3)]; }

  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

 private:
  std::size_t offset(int f1, int f2, int f3) const {
    return ((static_cast<std::size_t>(f1 - lo_) * side_) + static_cast<std::size_t>(f2 - lo_)) * side_ +
           static_cast<std::size_t>(f3 - lo_);
  }

  int lo_;
  int hi_;
  std::size_t side_;
  std::vector<Complex> data_;
};

/// out[f1][f2][f3] = sum_{r,s,t} values[r][s][t] tx(r,f1) ty(s,f2) tz(t,f3),
/// values being a point-indexed cube with t fastest. All tables must share the
/// frequency range; point counts must match the cube extents.
DenseCube analyze(std::span<const Complex> values, const PhaseTable& tx, const PhaseTable& ty,
                  const PhaseTable& tz);

/// out[i][j][k] = sum_f C[f1][f2][f3] tx(i,f1) ty(j,f2) tz(k,f3), k fastest.
std::vector<Complex> synthesize(const DenseCube& coeffs, const PhaseTable& tx, const PhaseTable& ty,
                                const PhaseTable& tz);

/// Scratch space for synthesize_plane, reusable across calls on one thread.
struct PlaneWorkspace {
  std::vector<Complex> folded;  // side^2
  std::vector<Complex> partial;  // points_x * side
};

/// One z-plane of synthesize: out[i][j] for z-phase row `zrow` (freq_count
/// entries). Serial; callers parallelize over planes.
void synthesize_plane(const DenseCube& coeffs, const PhaseTable& tx, const PhaseTable& ty,
                      const Complex* zrow, std::span<Complex> out, PlaneWorkspace& ws);

/// Pairwise (cascade) summation; deterministic for a fixed input order.
double pairwise_sum(std::span<const double> values);
Complex pairwise_sum(std::span<const Complex> values);

/// Threads used by the parallel kernels; 0 means the OpenMP default.
void set_thread_limit(int threads);
int thread_limit();

}  // namespace altexp::kernels
