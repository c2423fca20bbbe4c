#include "altexp/verify.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "altexp/alt_functions.hpp"
#include "altexp/c3_orbit.hpp"
#include "altexp/index_domain.hpp"
#include "altexp/interpolation.hpp"
#include "altexp/reference.hpp"
#include "altexp/transform.hpp"

namespace altexp::verify {

namespace {

using quad = __float128;

struct QuadComplex {
  quad re = 0;
  quad im = 0;
};

// Independent three-term evaluation in quad precision.
QuadComplex eval_E_quad(const IndexTriple& t, const quad p[3]) {
  static const quad two_pi = 2 * acosq(-1);
  const quad k = t.k, l = t.l, m = t.m;
  const quad phases[3] = {k * p[0] + l * p[1] + m * p[2], k * p[2] + l * p[0] + m * p[1],
                          k * p[1] + l * p[2] + m * p[0]};
  QuadComplex out;
  for (const quad ph : phases) {
    out.re += cosq(two_pi * ph);
    out.im += sinq(two_pi * ph);
  }
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Point3 point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
  IndexTriple index(int bound) { return {integer(-bound, bound), integer(-bound, bound), integer(-bound, bound)}; }
  LabelTriple label(double bound) { return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)}; }
  Complex complex() { return {uniform(-1, 1), uniform(-1, 1)}; }

  SampleSet random_samples(const GridSpec& grid) {
    return SampleSet::from_function(grid, [this](const Point3&) { return complex(); });
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult make(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual < tolerance};
}

double max_diff(const std::map<IndexTriple, Complex>& a, const std::map<IndexTriple, Complex>& b) {
  double worst = 0.0;
  for (const auto& [key, value] : a) {
    const auto it = b.find(key);
    if (it == b.end()) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(value - it->second));
  }
  return a.size() == b.size() ? worst : std::numeric_limits<double>::infinity();
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Complex fd_sigma_operator(int k, const IndexTriple& t, const Point3& p, double h) {
  if (k < 1 || k > 3) throw std::invalid_argument("sigma_k defined for k in {1,2,3}");
  static constexpr int kAxisSets[3][3][3] = {
      {{0}, {1}, {2}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 1, 2}},
  };
  static constexpr int kSetCount[3] = {3, 3, 1};
  static constexpr int kStencil[3] = {1, -2, 1};

  const quad base[3] = {p.x, p.y, p.z};
  const quad step = h;
  QuadComplex total;
  for (int set = 0; set < kSetCount[k - 1]; ++set) {
    const int* axes = kAxisSets[k - 1][set];
    int combos = 1;
    for (int i = 0; i < k; ++i) combos *= 3;
    QuadComplex partial;
    for (int c = 0; c < combos; ++c) {
      quad q[3] = {base[0], base[1], base[2]};
      quad weight = 1;
      int code = c;
      for (int i = 0; i < k; ++i) {
        const int offset = code % 3 - 1;
        code /= 3;
        q[axes[i]] += offset * step;
        weight *= kStencil[offset + 1];
      }
      const auto e = eval_E_quad(t, q);
      partial.re += weight * e.re;
      partial.im += weight * e.im;
    }
    total.re += partial.re;
    total.im += partial.im;
  }
  quad scale = 1;
  for (int i = 0; i < k; ++i) scale *= step * step;
  return {static_cast<double>(total.re / scale), static_cast<double>(total.im / scale)};
}

double fd_operator_relative_error(int k, const IndexTriple& t, const Point3& p) {
  const double eigen = operator_eigenvalue(k, t);
  const Complex value = eval_E(t, p);
  const Complex fd = fd_sigma_operator(k, t, p);
  const double err = std::abs(fd - eigen * value);
  // Near-zero |E| would make a pointwise ratio meaningless; floor it.
  const double unit = std::pow(4.0 * std::numbers::pi * std::numbers::pi, k);
  const double denom = eigen != 0.0 ? std::abs(eigen) * std::max(std::abs(value), 1e-3) : unit;
  return err / denom;
}

Report run_identity_suite(const Options& options) {
  Sampler rng(options.seed);
  const int count = std::max(options.instances, 1);
  Report report;

  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto t = rng.label(4.0);
      const auto p = rng.point(-1.0, 1.0);
      const Complex v = eval_E(t, p);
      worst = std::max({worst, std::abs(v - eval_E(t, rotate(p))), std::abs(v - eval_E(t, rotate(rotate(p)))),
                        std::abs(v - eval_E(rotate(t), p)), std::abs(v - eval_E(rotate(rotate(t)), p))});
    }
    report.checks.push_back(make("cyclic_symmetry", worst, 1e-13));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto t = rng.index(5);
      const auto p = rng.point(0.0, 1.0);
      const Point3 shift{static_cast<double>(rng.integer(-50, 50)), static_cast<double>(rng.integer(-50, 50)),
                         static_cast<double>(rng.integer(-50, 50))};
      worst = std::max(worst, std::abs(eval_E(t, p + shift) - eval_E(t, p)));
    }
    report.checks.push_back(make("periodicity", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto t = rng.index(5);
      const auto p = rng.point(0.0, 1.0);
      const double a = rng.uniform(-2.0, 2.0);
      worst = std::max(worst, std::abs(eval_E(t, p + Point3{a, a, a}) - shift_phase(t, a) * eval_E(t, p)));
    }
    report.checks.push_back(make("diagonal_shift", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto a = rng.label(4.0);
      const auto b = rng.label(4.0);
      const auto p = rng.point(-1.0, 1.0);
      const auto d = product_indices(a, b);
      const Complex rhs = eval_E(d.terms[0], p) + eval_E(d.terms[1], p) + eval_E(d.terms[2], p);
      worst = std::max(worst, std::abs(eval_E(a, p) * eval_E(b, p) - rhs));
    }
    report.checks.push_back(make("product_of_labels", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto t = rng.label(4.0);
      worst = std::max(worst, point_product_residual(t, rng.point(-1.0, 1.0), rng.point(-1.0, 1.0)));
    }
    report.checks.push_back(make("product_of_points", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto t = rng.index(5);
      const auto p = rng.point(0.0, 1.0);
      const quad q[3] = {p.x, p.y, p.z};
      const auto e = eval_E_quad(t, q);
      worst = std::max(worst, std::abs(eval_E(t, p) - Complex{static_cast<double>(e.re), static_cast<double>(e.im)}));
    }
    report.checks.push_back(make("eval_E_vs_quad", worst, 1e-13));
  }
  for (int k = 1; k <= 3; ++k) {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) worst = std::max(worst, fd_operator_relative_error(k, rng.index(3), rng.point(0, 1)));
    report.checks.push_back(make("operator_sigma_" + std::to_string(k), worst, 1e-4));
  }
  {
    double worst = 0.0;
    for (int N = 1; N <= 8; ++N)
      for (int trial = 0; trial < 5; ++trial) {
        const GridSpec grid{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), N, 1.0};
        const auto gram = discrete_gram(grid);
        const double volume = static_cast<double>(N) * N * N;
        const std::size_t P = gram.keys.size();
        for (std::size_t r = 0; r < P; ++r)
          for (std::size_t c = 0; c < P; ++c) {
            const double expected = r == c ? weight_g(gram.keys[r]) : 0.0;
            worst = std::max(worst, std::abs(gram(r, c) / volume - expected));
          }
      }
    report.checks.push_back(make("discrete_orthogonality", worst, 1e-9));
  }
  {
    double round_trip = 0.0;
    double versus_naive = 0.0;
    for (const int N : {2, 3, 5, 7, 9}) {
      const GridSpec grid{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), N, 1.0};
      const auto samples = rng.random_samples(grid);
      const auto beta = adft_forward(samples);
      round_trip = std::max(round_trip, max_diff(adft_inverse(beta).values, samples.values));
      versus_naive = std::max(versus_naive, max_diff(beta.values, reference::adft_forward(samples).values));
    }
    report.checks.push_back(make("adft_round_trip", round_trip, 1e-10));
    report.checks.push_back(make("adft_parallel_vs_naive", versus_naive, 1e-11));
  }
  {
    double worst = 0.0;
    for (const int N : {3, 5, 7, 9}) {
      const GridSpec grid{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), N, 1.0};
      const auto samples = rng.random_samples(grid);
      const auto interp = alt_interpolate_direct(samples);
      for (const auto& gp : grid_points(grid))
        worst = std::max(worst, std::abs(eval_psi_alt(interp, gp.point) - samples.values.at(gp.index)));
    }
    report.checks.push_back(make("interpolation_constraint", worst, 1e-11));
  }
  {
    double worst = 0.0;
    bool faulted = false;
    for (const int N : {3, 5, 7}) {
      const int M = (N - 1) / 2;
      const GridSpec grid{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), N, 1.0};
      const auto samples = rng.random_samples(grid);
      const auto direct = alt_interpolate_direct(samples);
      const auto beta = adft_forward(samples);
      auto remapped = remap_beta_to_c(beta, M);
      if (options.inject_remap_fault && !faulted) {
        // Read the first region-2 entry from the transposed beta index.
        for (auto& [key, value] : remapped.values) {
          const auto src = remap_source(key, M);
          if (src.region != 2) continue;
          value = beta.values.at(canonicalize(IndexTriple{src.source.l, src.source.k, src.source.m}));
          faulted = true;
          break;
        }
      }
      worst = std::max(worst, max_diff(remapped.values, direct.coeffs.values));
    }
    report.checks.push_back(make("remap_vs_direct", worst, 1e-12));
  }
  {
    double mismatches = 0.0;
    for (int M = 1; M <= 3; ++M) {
      const auto keys = enumerate_domain({-M, M});
      if (keys.size() != alt_coefficient_count(M) || keys.size() != domain_size(2 * M + 1)) mismatches += 1.0;
    }
    report.checks.push_back(make("coefficient_count", mismatches, 0.5));
  }

  auto c3 = run_c3_suite(options);
  report.checks.insert(report.checks.end(), c3.checks.begin(), c3.checks.end());
  return report;
}

Report run_c3_suite(const Options& options) {
  Sampler rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  const int count = std::max(options.instances, 1);
  Report report;

  const auto& group = c3::tilde_we();
  report.checks.push_back(make("tilde_we_order", std::abs(static_cast<double>(group.size()) - 8.0), 0.5));
  {
    double worst = 0.0;
    for (const auto& w : group)
      worst = std::max(worst, w.is_signed_permutation() ? std::abs(w.determinant() - 1.0) : 1.0);
    report.checks.push_back(make("tilde_we_even", worst, 0.5));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const c3::Weight v{{rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)}};
      const auto table = c3::we_orbit(v);
      const auto generated = c3::we_orbit_by_reflections(v);
      if (generated.size() != table.size()) {
        worst = std::numeric_limits<double>::infinity();
        break;
      }
      auto distance = [](const c3::Weight& a, const c3::Weight& b) {
        return std::max({std::abs(a.v[0] - b.v[0]), std::abs(a.v[1] - b.v[1]), std::abs(a.v[2] - b.v[2])});
      };
      for (const auto& w : table) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& g : generated) best = std::min(best, distance(w, g));
        worst = std::max(worst, best);
      }
      // The listed weights are pairwise distinct at a generic point.
      for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = a + 1; b < table.size(); ++b)
          if (distance(table[a], table[b]) < 1e-9) worst = std::numeric_limits<double>::infinity();
    }
    report.checks.push_back(make("orbit_table_vs_reflections", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto t = rng.label(4.0);
      const auto p = rng.point(-1.0, 1.0);
      worst = std::max(worst, std::abs(c3::eval_EW(c3::weight_from_label(t), c3::coweight_from_point(p)) -
                                       c3::eval_EW_expanded(t, p)));
    }
    report.checks.push_back(make("ew_expanded_form", worst, 1e-11));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) worst = std::max(worst, c3::symmetrization_residual(rng.label(4.0), rng.point(-1.0, 1.0)));
    report.checks.push_back(make("symmetrization", worst, 1e-10));
  }
  return report;
}

}  // namespace altexp::verify
