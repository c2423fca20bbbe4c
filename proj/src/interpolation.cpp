#include "altexp/interpolation.hpp"

#include <sstream>
#include <stdexcept>

#include "altexp/alt_functions.hpp"
#include "altexp/errors.hpp"
#include "altexp/index_domain.hpp"

namespace altexp {

namespace {

int half_width(int N) {
  if (N % 2 == 0) throw ParityError(N);
  return (N - 1) / 2;
}

void require_period(double T) {
  if (!(T > 0.0)) throw std::invalid_argument("period T must be positive");
}

std::vector<double> scaled(std::span<const double> xs, double period) {
  std::vector<double> out(xs.begin(), xs.end());
  for (auto& v : out) v /= period;
  return out;
}

}  // namespace

Complex InterpolantStd::coefficient(int k, int l, int m) const {
  const auto S = static_cast<std::size_t>(2 * M + 1);
  return coeffs[(static_cast<std::size_t>(k + M) * S + static_cast<std::size_t>(l + M)) * S +
                static_cast<std::size_t>(m + M)];
}

InterpolantAlt alt_interpolate_direct(const SampleSet& samples) {
  const int M = half_width(samples.grid.N);
  const auto dense = detail::dense_samples(samples);
  const DomainRange range{-M, M};
  const auto values = detail::alternating_analysis(samples.grid, dense, range);

  InterpolantAlt out;
  out.M = M;
  out.coeffs = CoefficientSet{samples.grid, CoefficientRole::c_alt, M, {}};
  const auto keys = enumerate_domain(range);
  for (std::size_t i = 0; i < keys.size(); ++i) out.coeffs.values.emplace_hint(out.coeffs.values.end(), keys[i], values[i]);
  return out;
}

RemapSource remap_source(const IndexTriple& t, int M) {
  auto inside = [M](int v) { return v >= -M && v <= M; };
  if (!inside(t.k) || !inside(t.l) || !inside(t.m) || !is_semidominant(t)) {
    std::ostringstream os;
    os << "triple " << t << " is not in D^e_+(" << -M << "," << M << ")";
    throw std::invalid_argument(os.str());
  }
  const int N = 2 * M + 1;
  const auto [k, l, m] = t;
  if (k >= 0 && l >= 0 && m >= 0) return {1, {k, l, m}, 0};
  if (k >= 0 && l >= 0) {
    if (k < l) return {2, {l, m + N, k}, 1};
    return {3, {m + N, k, l}, 1};
  }
  if (k >= 0) return {4, {l + N, m + N, k}, 2};
  if (l < 0) return {5, {k + N, l + N, m + N}, 3};
  return {6, {m + N, k + N, l}, 2};
}

CoefficientSet remap_beta_to_c(const CoefficientSet& beta, int M) {
  if (beta.role != CoefficientRole::beta) throw std::invalid_argument("remap expects role beta");
  const int N = 2 * M + 1;
  if (M < 0 || beta.grid.N != N) {
    std::ostringstream os;
    os << "beta grid has N = " << beta.grid.N << ", remap for M = " << M << " needs N = " << N;
    throw DimensionError(os.str());
  }
  if (beta.values.size() != domain_size(N)) throw DimensionError("beta key set does not cover D^e_+(0,N-1)");

  // A label shifted by N picks up e(N a + b) on L_{a,b,N,1}.
  const Complex step = cis_turns(N * beta.grid.a + beta.grid.b);
  const Complex phases[4] = {1.0, step, step * step, step * step * step};

  CoefficientSet out{beta.grid, CoefficientRole::c_alt, M, {}};
  for (const auto& key : enumerate_domain({-M, M})) {
    const auto src = remap_source(key, M);
    const auto it = beta.values.find(src.source);
    if (it == beta.values.end()) throw MissingEntryError("coefficient", src.source);
    out.values.emplace_hint(out.values.end(), key, phases[src.negatives] * it->second);
  }
  return out;
}

Complex eval_psi_alt(const InterpolantAlt& interp, const Point3& p) {
  const Point3 q = p / interp.period;
  Complex acc{};
  for (const auto& [key, c] : interp.coeffs.values) acc += c * eval_E(key, q);
  return acc;
}

InterpolantStd std_interpolate(const CubeSampleSet& samples) {
  const auto& grid = samples.grid;
  grid.validate();
  const int M = half_width(grid.N);
  const auto n = static_cast<std::size_t>(grid.N);
  if (samples.values.size() != n * n * n) throw DimensionError("cube sample count must be N^3");

  // Normalized coordinates x_r / T = a/T + (r+b)/N.
  const GridSpec unit{grid.a / grid.T, grid.b, grid.N, 1.0};
  const auto table = kernels::PhaseTable::lattice(unit, -M, M, /*conjugate=*/true);
  auto cube = kernels::analyze(samples.values, table, table, table);
  const double volume = static_cast<double>(n * n * n);
  for (auto& c : cube.data()) c /= volume;

  InterpolantStd out;
  out.M = M;
  out.period = grid.T;
  out.origin = grid;
  out.coeffs = std::move(cube.data());
  return out;
}

Complex eval_psi_std(const InterpolantStd& interp, const Point3& p) {
  const Point3 q = p / interp.period;
  const int M = interp.M;
  const auto S = static_cast<std::size_t>(2 * M + 1);
  std::vector<Complex> ex(S), ey(S), ez(S);
  for (int f = -M; f <= M; ++f) {
    const auto j = static_cast<std::size_t>(f + M);
    ex[j] = cis_turns(f * q.x);
    ey[j] = cis_turns(f * q.y);
    ez[j] = cis_turns(f * q.z);
  }
  Complex acc{};
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j) {
      Complex row{};
      const Complex* c = interp.coeffs.data() + (i * S + j) * S;
      for (std::size_t k = 0; k < S; ++k) row += c[k] * ez[k];
      acc += ex[i] * ey[j] * row;
    }
  return acc;
}

InterpolantAlt rescale_to_period(const InterpolantAlt& interp, double T) {
  require_period(T);
  InterpolantAlt out = interp;
  out.period *= T;
  return out;
}

InterpolantStd rescale_to_period(const InterpolantStd& interp, double T) {
  require_period(T);
  InterpolantStd out = interp;
  out.period *= T;
  return out;
}

CoefficientSet to_coefficient_set(const InterpolantStd& interp) {
  CoefficientSet out{interp.origin, CoefficientRole::c_std, interp.M, {}};
  out.grid.T = interp.period;
  for (int k = -interp.M; k <= interp.M; ++k)
    for (int l = -interp.M; l <= interp.M; ++l)
      for (int m = -interp.M; m <= interp.M; ++m)
        out.values.emplace_hint(out.values.end(), IndexTriple{k, l, m}, interp.coefficient(k, l, m));
  return out;
}

CoefficientSet to_coefficient_set(const InterpolantAlt& interp) {
  // Stored grids are normalized to period 1; serialize in physical units.
  CoefficientSet out = interp.coeffs;
  out.grid.a *= interp.period;
  out.grid.T = interp.period;
  return out;
}

InterpolantStd std_from_coefficient_set(const CoefficientSet& coeffs) {
  if (coeffs.role != CoefficientRole::c_std || !coeffs.M)
    throw std::invalid_argument("expected a c_std coefficient set with M");
  const int M = *coeffs.M;
  InterpolantStd out;
  out.M = M;
  out.period = coeffs.grid.T;
  out.origin = coeffs.grid;
  const auto S = static_cast<std::size_t>(2 * M + 1);
  out.coeffs.reserve(S * S * S);
  for (int k = -M; k <= M; ++k)
    for (int l = -M; l <= M; ++l)
      for (int m = -M; m <= M; ++m) {
        const auto it = coeffs.values.find({k, l, m});
        if (it == coeffs.values.end()) throw MissingEntryError("coefficient", {k, l, m});
        out.coeffs.push_back(it->second);
      }
  if (coeffs.values.size() != S * S * S) throw DimensionError("c_std key set exceeds [-M,M]^3");
  return out;
}

InterpolantAlt alt_from_coefficient_set(const CoefficientSet& coeffs) {
  if (coeffs.role != CoefficientRole::c_alt || !coeffs.M)
    throw std::invalid_argument("expected a c_alt coefficient set with M");
  const int M = *coeffs.M;
  for (const auto& key : enumerate_domain({-M, M}))
    if (!coeffs.values.contains(key)) throw MissingEntryError("coefficient", key);
  if (coeffs.values.size() != alt_coefficient_count(M)) throw DimensionError("c_alt key set exceeds D^e_+(-M,M)");
  InterpolantAlt out;
  out.M = M;
  out.period = coeffs.grid.T;
  out.coeffs = coeffs;
  out.coeffs.grid.a /= coeffs.grid.T;
  out.coeffs.grid.T = 1.0;
  return out;
}

kernels::DenseCube dense_coefficients(const InterpolantAlt& interp) {
  kernels::DenseCube cube(-interp.M, interp.M);
  for (const auto& [t, c] : interp.coeffs.values) {
    cube.at(t.k, t.l, t.m) += c;
    cube.at(t.l, t.m, t.k) += c;
    cube.at(t.m, t.k, t.l) += c;
  }
  return cube;
}

std::vector<Complex> eval_psi_alt_tensor(const InterpolantAlt& interp, std::span<const double> xs,
                                         std::span<const double> ys, std::span<const double> zs) {
  const auto cube = dense_coefficients(interp);
  const auto tx = kernels::PhaseTable::points(scaled(xs, interp.period), -interp.M, interp.M);
  const auto ty = kernels::PhaseTable::points(scaled(ys, interp.period), -interp.M, interp.M);
  const auto tz = kernels::PhaseTable::points(scaled(zs, interp.period), -interp.M, interp.M);
  return kernels::synthesize(cube, tx, ty, tz);
}

}  // namespace altexp
