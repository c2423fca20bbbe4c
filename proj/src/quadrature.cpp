#include "altexp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "altexp/alt_functions.hpp"
#include "altexp/index_domain.hpp"
#include "altexp/kernels.hpp"

namespace altexp {

namespace {

void require_cells(QuadratureSpec q) {
  if (q.n < 1) throw std::invalid_argument("quadrature needs n >= 1 cells per axis");
}

double centre(int i, int n) { return (i + 0.5) / n; }

std::vector<double> centres(int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = centre(i, n);
  return out;
}

// Midpoint sum over F: `plane(iz, buffer)` appends the integrand at every
// in-F cell centre of plane iz; planes are summed pairwise.
template <typename Value, typename PlaneFn>
Value midpoint_over_F(int n, PlaneFn&& plane) {
  std::vector<Value> plane_sums(static_cast<std::size_t>(n));
#pragma omp parallel
  {
    std::vector<Value> buffer;
    buffer.reserve(static_cast<std::size_t>(n) * n);
#pragma omp for schedule(dynamic)
    for (int iz = 0; iz < n; ++iz) {
      buffer.clear();
      plane(iz, buffer);
      plane_sums[static_cast<std::size_t>(iz)] = kernels::pairwise_sum(std::span<const Value>(buffer));
    }
  }
  const double cell = 1.0 / (static_cast<double>(n) * n * n);
  return kernels::pairwise_sum(std::span<const Value>(plane_sums)) * cell;
}

template <typename Value, typename Fn>
Value integrate_pointwise(const Fn& fn, QuadratureSpec q) {
  require_cells(q);
  const int n = q.n;
  return midpoint_over_F<Value>(n, [&](int iz, std::vector<Value>& out) {
    const double z = centre(iz, n);
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy) {
        const Point3 p{centre(ix, n), centre(iy, n), z};
        if (in_fundamental_domain(p)) out.push_back(fn(p));
      }
  });
}

}  // namespace

void BumpParams::validate() const {
  if (!(alpha > 0.0 && alpha < beta)) throw std::invalid_argument("bump radii must satisfy 0 < alpha < beta");
}

double bump(const BumpParams& params, const Point3& p) {
  const Point3 d = p - params.center;
  const double r = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
  if (r < params.alpha) return 1.0;
  if (r >= params.beta) return 0.0;
  const double q = (r - params.alpha) / (params.beta - params.alpha);
  return std::numbers::e * std::exp(1.0 / (q * q - 1.0));
}

double integrate_over_F(const RealFunction& fn, QuadratureSpec q) { return integrate_pointwise<double>(fn, q); }

Complex integrate_complex_over_F(const ComplexFunction& fn, QuadratureSpec q) {
  return integrate_pointwise<Complex>(fn, q);
}

double interpolation_error(const RealFunction& f, const InterpolantAlt& interp, QuadratureSpec q) {
  require_cells(q);
  const int n = q.n;
  const auto cube = dense_coefficients(interp);
  auto coords = centres(n);
  for (auto& c : coords) c /= interp.period;
  const auto table = kernels::PhaseTable::points(coords, -interp.M, interp.M);
  const auto un = static_cast<std::size_t>(n);

  return midpoint_over_F<double>(n, [&](int iz, std::vector<double>& out) {
    thread_local kernels::PlaneWorkspace ws;
    thread_local std::vector<Complex> psi;
    psi.resize(un * un);
    kernels::synthesize_plane(cube, table, table, table.row(static_cast<std::size_t>(iz)), psi, ws);
    const double z = centre(iz, n);
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy) {
        const Point3 p{centre(ix, n), centre(iy, n), z};
        if (!in_fundamental_domain(p)) continue;
        const double diff = std::abs(f(p) - psi[static_cast<std::size_t>(ix) * un + static_cast<std::size_t>(iy)]);
        out.push_back(diff * diff);
      }
  });
}

std::vector<Complex> continuous_gram(std::span<const IndexTriple> labels, QuadratureSpec q) {
  require_cells(q);
  const int n = q.n;
  const std::size_t L = labels.size();
  std::vector<std::vector<Complex>> plane_entries(static_cast<std::size_t>(n), std::vector<Complex>(L * L));

#pragma omp parallel
  {
    std::vector<Complex> values;
    std::vector<Complex> products;
#pragma omp for schedule(dynamic)
    for (int iz = 0; iz < n; ++iz) {
      const double z = centre(iz, n);
      values.clear();
      std::size_t count = 0;
      for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy) {
          const Point3 p{centre(ix, n), centre(iy, n), z};
          if (!in_fundamental_domain(p)) continue;
          for (const auto& t : labels) values.push_back(eval_E(t, p));
          ++count;
        }
      auto& entries = plane_entries[static_cast<std::size_t>(iz)];
      products.resize(count);
      for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j) {
          for (std::size_t c = 0; c < count; ++c) products[c] = values[c * L + i] * std::conj(values[c * L + j]);
          entries[i * L + j] = kernels::pairwise_sum(std::span<const Complex>(products));
        }
    }
  }

  const double cell = 1.0 / (static_cast<double>(n) * n * n);
  std::vector<Complex> out(L * L);
  std::vector<Complex> column(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < L * L; ++e) {
    for (std::size_t iz = 0; iz < static_cast<std::size_t>(n); ++iz) column[iz] = plane_entries[iz][e];
    out[e] = kernels::pairwise_sum(std::span<const Complex>(column)) * cell;
  }
  return out;
}

Complex continuous_gram_entry(const IndexTriple& t, const IndexTriple& t2, QuadratureSpec q) {
  const IndexTriple labels[2] = {t, t2};
  return continuous_gram(labels, q)[1];
}

ErrorTableRow bump_interpolation_error(int N, const BumpParams& params, QuadratureSpec q, double a, double b) {
  params.validate();
  const GridSpec grid{a, b, N, 1.0};
  const auto samples = SampleSet::from_function(grid, [&](const Point3& p) { return Complex{bump(params, p)}; });
  const auto interp = alt_interpolate_direct(samples);
  return {N, interpolation_error([&](const Point3& p) { return bump(params, p); }, interp, q)};
}

}  // namespace altexp
