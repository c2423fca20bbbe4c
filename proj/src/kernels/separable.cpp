#include <algorithm>
#include <stdexcept>

#include "altexp/alt_functions.hpp"
#include "altexp/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altexp::kernels {

namespace {

int g_thread_limit = 0;

long long floor_mod(long long v, long long n) {
  const long long r = v % n;
  return r < 0 ? r + n : r;
}

void require_same_range(const PhaseTable& a, const PhaseTable& b, const PhaseTable& c) {
  if (a.lo() != b.lo() || a.lo() != c.lo() || a.hi() != b.hi() || a.hi() != c.hi())
    throw std::invalid_argument("phase tables disagree on the frequency range");
}

}  // namespace

void set_thread_limit(int threads) {
  g_thread_limit = std::max(0, threads);
#ifdef _OPENMP
  if (g_thread_limit > 0) omp_set_num_threads(g_thread_limit);
#endif
}
int thread_limit() { return g_thread_limit; }

PhaseTable::PhaseTable(int lo, int hi, std::size_t points) : lo_(lo), hi_(hi), points_(points) {
  if (hi < lo) throw std::invalid_argument("empty frequency range");
  data_.resize(points_ * freq_count());
}

PhaseTable PhaseTable::lattice(const GridSpec& grid, int lo, int hi, bool conjugate) {
  grid.validate();
  const int N = grid.N;
  PhaseTable table(lo, hi, static_cast<std::size_t>(N));
  std::vector<Complex> roots(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) roots[static_cast<std::size_t>(j)] = cis_turns(static_cast<double>(j) / N);
  // x_r = a + (r+b)/N, so e(f x_r) = e(f (a + b/N)) w^{f r}.
  const double offset = grid.a + grid.b / N;
  const double sign = conjugate ? -1.0 : 1.0;
  for (int f = lo; f <= hi; ++f) {
    const Complex base = cis_turns(static_cast<double>(f) * offset);
    for (int r = 0; r < N; ++r) {
      Complex v = base * roots[static_cast<std::size_t>(floor_mod(static_cast<long long>(f) * r, N))];
      if (sign < 0) v = std::conj(v);
      table.data_[static_cast<std::size_t>(r) * table.freq_count() + static_cast<std::size_t>(f - lo)] = v;
    }
  }
  return table;
}

PhaseTable PhaseTable::points(std::span<const double> xs, int lo, int hi, bool conjugate) {
  PhaseTable table(lo, hi, xs.size());
  const double sign = conjugate ? -1.0 : 1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double u = xs[i] - std::floor(xs[i]);
    for (int f = lo; f <= hi; ++f) {
      double t = static_cast<double>(f) * u;
      t -= std::nearbyint(t);
      table.data_[i * table.freq_count() + static_cast<std::size_t>(f - lo)] = cis_turns(sign * t);
    }
  }
  return table;
}

DenseCube::DenseCube(int lo, int hi)
    : lo_(lo), hi_(hi), side_(static_cast<std::size_t>(hi - lo + 1)), data_(side_ * side_ * side_) {
  if (hi < lo) throw std::invalid_argument("empty frequency range");
}

DenseCube analyze(std::span<const Complex> values, const PhaseTable& tx, const PhaseTable& ty,
                  const PhaseTable& tz) {
  require_same_range(tx, ty, tz);
  const std::size_t nx = tx.point_count();
  const std::size_t ny = ty.point_count();
  const std::size_t nz = tz.point_count();
  const std::size_t S = tx.freq_count();
  if (values.size() != nx * ny * nz) throw std::invalid_argument("value cube does not match the phase tables");

  // a1[r][s][f3] = sum_t v[r][s][t] tz(t,f3)
  std::vector<Complex> a1(nx * ny * S);
  const long long rows = static_cast<long long>(nx * ny);
#pragma omp parallel for schedule(static)
  for (long long rs = 0; rs < rows; ++rs) {
    const Complex* in = values.data() + static_cast<std::size_t>(rs) * nz;
    Complex* out = a1.data() + static_cast<std::size_t>(rs) * S;
    for (std::size_t t = 0; t < nz; ++t) {
      const Complex v = in[t];
      const Complex* ph = tz.row(t);
      for (std::size_t f = 0; f < S; ++f) out[f] += v * ph[f];
    }
  }

  // a2[r][f2][f3] = sum_s a1[r][s][f3] ty(s,f2)
  std::vector<Complex> a2(nx * S * S);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < static_cast<long long>(nx); ++r) {
    const std::size_t ur = static_cast<std::size_t>(r);
    for (std::size_t s = 0; s < ny; ++s) {
      const Complex* in = a1.data() + (ur * ny + s) * S;
      const Complex* ph = ty.row(s);
      for (std::size_t f2 = 0; f2 < S; ++f2) {
        const Complex w = ph[f2];
        Complex* out = a2.data() + (ur * S + f2) * S;
        for (std::size_t f3 = 0; f3 < S; ++f3) out[f3] += in[f3] * w;
      }
    }
  }

  // out[f1][f2][f3] = sum_r a2[r][f2][f3] tx(r,f1)
  DenseCube cube(tx.lo(), tx.hi());
  auto& out = cube.data();
#pragma omp parallel for schedule(static)
  for (long long f1 = 0; f1 < static_cast<long long>(S); ++f1) {
    const std::size_t uf1 = static_cast<std::size_t>(f1);
    Complex* dst = out.data() + uf1 * S * S;
    for (std::size_t r = 0; r < nx; ++r) {
      const Complex w = tx(r, uf1);
      const Complex* src = a2.data() + r * S * S;
      for (std::size_t j = 0; j < S * S; ++j) dst[j] += src[j] * w;
    }
  }
  return cube;
}

std::vector<Complex> synthesize(const DenseCube& coeffs, const PhaseTable& tx, const PhaseTable& ty,
                                const PhaseTable& tz) {
  require_same_range(tx, ty, tz);
  if (tx.lo() != coeffs.lo() || tx.hi() != coeffs.hi())
    throw std::invalid_argument("phase tables do not match the coefficient cube");
  const std::size_t S = coeffs.side();
  const std::size_t nx = tx.point_count();
  const std::size_t ny = ty.point_count();
  const std::size_t nz = tz.point_count();
  const auto& c = coeffs.data();

  // b1[f1][f2][k] = sum_f3 c[f1][f2][f3] tz(k,f3)
  std::vector<Complex> b1(S * S * nz);
#pragma omp parallel for schedule(static)
  for (long long row = 0; row < static_cast<long long>(S * S); ++row) {
    const Complex* in = c.data() + static_cast<std::size_t>(row) * S;
    Complex* out = b1.data() + static_cast<std::size_t>(row) * nz;
    for (std::size_t k = 0; k < nz; ++k) {
      const Complex* ph = tz.row(k);
      Complex acc{};
      for (std::size_t f3 = 0; f3 < S; ++f3) acc += in[f3] * ph[f3];
      out[k] = acc;
    }
  }

  // b2[f1][j][k] = sum_f2 b1[f1][f2][k] ty(j,f2)
  std::vector<Complex> b2(S * ny * nz);
#pragma omp parallel for schedule(static)
  for (long long f1 = 0; f1 < static_cast<long long>(S); ++f1) {
    const std::size_t uf1 = static_cast<std::size_t>(f1);
    for (std::size_t j = 0; j < ny; ++j) {
      Complex* out = b2.data() + (uf1 * ny + j) * nz;
      const Complex* ph = ty.row(j);
      for (std::size_t f2 = 0; f2 < S; ++f2) {
        const Complex w = ph[f2];
        const Complex* in = b1.data() + (uf1 * S + f2) * nz;
        for (std::size_t k = 0; k < nz; ++k) out[k] += in[k] * w;
      }
    }
  }

  // out[i][j][k] = sum_f1 b2[f1][j][k] tx(i,f1)
  std::vector<Complex> out(nx * ny * nz);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(nx); ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    Complex* dst = out.data() + ui * ny * nz;
    const Complex* ph = tx.row(ui);
    for (std::size_t f1 = 0; f1 < S; ++f1) {
      const Complex w = ph[f1];
      const Complex* src = b2.data() + f1 * ny * nz;
      for (std::size_t j = 0; j < ny * nz; ++j) dst[j] += src[j] * w;
    }
  }
  return out;
}

void synthesize_plane(const DenseCube& coeffs, const PhaseTable& tx, const PhaseTable& ty,
                      const Complex* zrow, std::span<Complex> out, PlaneWorkspace& ws) {
  const std::size_t S = coeffs.side();
  const std::size_t nx = tx.point_count();
  const std::size_t ny = ty.point_count();
  if (out.size() != nx * ny) throw std::invalid_argument("plane buffer has the wrong size");
  const auto& c = coeffs.data();

  ws.folded.assign(S * S, Complex{});
  for (std::size_t row = 0; row < S * S; ++row) {
    const Complex* in = c.data() + row * S;
    Complex acc{};
    for (std::size_t f3 = 0; f3 < S; ++f3) acc += in[f3] * zrow[f3];
    ws.folded[row] = acc;
  }

  ws.partial.assign(nx * S, Complex{});
  for (std::size_t i = 0; i < nx; ++i) {
    const Complex* ph = tx.row(i);
    Complex* dst = ws.partial.data() + i * S;
    for (std::size_t f1 = 0; f1 < S; ++f1) {
      const Complex w = ph[f1];
      const Complex* src = ws.folded.data() + f1 * S;
      for (std::size_t f2 = 0; f2 < S; ++f2) dst[f2] += src[f2] * w;
    }
  }

  for (std::size_t i = 0; i < nx; ++i) {
    const Complex* src = ws.partial.data() + i * S;
    for (std::size_t j = 0; j < ny; ++j) {
      const Complex* ph = ty.row(j);
      Complex acc{};
      for (std::size_t f2 = 0; f2 < S; ++f2) acc += src[f2] * ph[f2];
      out[i * ny + j] = acc;
    }
  }
}

namespace {

template <typename T>
T pairwise(const T* v, std::size_t n) {
  if (n <= 8) {
    T acc{};
    for (std::size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise(v, half) + pairwise(v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise(values.data(), values.size()); }
Complex pairwise_sum(std::span<const Complex> values) { return pairwise(values.data(), values.size()); }

}  // namespace altexp::kernels
