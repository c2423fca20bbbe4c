#include "altexp/reference.hpp"

#include <stdexcept>

#include "altexp/alt_functions.hpp"
#include "altexp/errors.hpp"
#include "altexp/index_domain.hpp"

namespace altexp::reference {

namespace {

// 1/(G_key N^3) sum over the grid of G_rst^{-1} f conj(E_key), term by term.
std::map<IndexTriple, Complex> direct_coefficients(const SampleSet& samples, DomainRange range) {
  const auto dense = detail::dense_samples(samples);
  const auto points = grid_points(samples.grid);
  const double volume = static_cast<double>(samples.grid.N) * samples.grid.N * samples.grid.N;
  std::map<IndexTriple, Complex> out;
  for (const auto& key : enumerate_domain(range)) {
    Complex acc{};
    for (std::size_t p = 0; p < points.size(); ++p)
      acc += dense[p] * std::conj(eval_E(key, points[p].point)) / static_cast<double>(weight_g(points[p].index));
    out.emplace_hint(out.end(), key, acc / (weight_g(key) * volume));
  }
  return out;
}

}  // namespace

CoefficientSet adft_forward(const SampleSet& samples) {
  return {samples.grid, CoefficientRole::beta, std::nullopt, direct_coefficients(samples, {0, samples.grid.N - 1})};
}

SampleSet adft_inverse(const CoefficientSet& beta) {
  if (beta.role != CoefficientRole::beta) throw std::invalid_argument("adft_inverse expects role beta");
  SampleSet out{beta.grid, {}};
  for (const auto& gp : grid_points(beta.grid)) {
    Complex acc{};
    for (const auto& key : enumerate_domain({0, beta.grid.N - 1})) {
      const auto it = beta.values.find(key);
      if (it == beta.values.end()) throw MissingEntryError("coefficient", key);
      acc += it->second * eval_E(key, gp.point);
    }
    out.values.emplace_hint(out.values.end(), gp.index, acc);
  }
  return out;
}

InterpolantAlt alt_interpolate_direct(const SampleSet& samples) {
  if (samples.grid.N % 2 == 0) throw ParityError(samples.grid.N);
  const int M = (samples.grid.N - 1) / 2;
  InterpolantAlt out;
  out.M = M;
  out.coeffs = CoefficientSet{samples.grid, CoefficientRole::c_alt, M, direct_coefficients(samples, {-M, M})};
  return out;
}

InterpolantStd std_interpolate(const CubeSampleSet& samples) {
  const auto& grid = samples.grid;
  grid.validate();
  if (grid.N % 2 == 0) throw ParityError(grid.N);
  const int M = (grid.N - 1) / 2;
  const int N = grid.N;
  InterpolantStd out;
  out.M = M;
  out.period = grid.T;
  out.origin = grid;
  for (int k = -M; k <= M; ++k)
    for (int l = -M; l <= M; ++l)
      for (int m = -M; m <= M; ++m) {
        Complex acc{};
        std::size_t at = 0;
        for (int r = 0; r < N; ++r)
          for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t) {
              const double phase = (k * grid.coordinate(r) + l * grid.coordinate(s) + m * grid.coordinate(t)) / grid.T;
              acc += samples.values[at++] * cis_turns(-phase);
            }
        out.coeffs.push_back(acc / (static_cast<double>(N) * N * N));
      }
  return out;
}

double interpolation_error(const RealFunction& f, const InterpolantAlt& interp, QuadratureSpec q) {
  if (q.n < 1) throw std::invalid_argument("quadrature needs n >= 1 cells per axis");
  const int n = q.n;
  double acc = 0.0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const Point3 p{(ix + 0.5) / n, (iy + 0.5) / n, (iz + 0.5) / n};
        if (!in_fundamental_domain(p)) continue;
        const double d = std::abs(f(p) - eval_psi_alt(interp, p));
        acc += d * d;
      }
  return acc / (static_cast<double>(n) * n * n);
}

}  // namespace altexp::reference
