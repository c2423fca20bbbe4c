// Release gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Runtime budgets are part of each criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "altexp/index_domain.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/transform.hpp"
#include "altexp/verify.hpp"

using namespace altexp;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const verify::CheckResult& check_named(const verify::Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check named " + name);
}

Outcome checks_below(const verify::Report& r, const std::vector<std::pair<std::string, double>>& wanted) {
  Outcome o{true, ""};
  for (const auto& [name, tol] : wanted) {
    const auto& c = check_named(r, name);
    const bool ok = c.passed && c.max_residual < tol;
    o.passed = o.passed && ok;
    o.detail += fmt("%s%s=%.2e", o.detail.empty() ? "" : " ", name.c_str(), c.max_residual);
  }
  return o;
}

verify::Report identity_report() {
  verify::Options options;
  options.seed = 42;
  options.instances = 100;
  return verify::run_identity_suite(options);
}

Outcome discrete_orthogonality() {
  return checks_below(identity_report(), {{"discrete_orthogonality", 1e-9}});
}

Outcome grid_combinatorics() {
  bool ok = true;
  for (int N = 1; N <= 20; ++N)
    ok = ok && enumerate_domain({0, N - 1}).size() == static_cast<std::size_t>(N * (N * N + 2) / 3);
  // The eleven points of L_{0,0,3,1}, in thirds.
  const int listed[11][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 0}, {2, 0, 0},
                             {2, 1, 0}, {2, 1, 1}, {2, 2, 0}, {2, 2, 1}, {2, 2, 2}};
  const auto pts = grid_points({0.0, 0.0, 3, 1.0});
  ok = ok && pts.size() == 11;
  for (std::size_t i = 0; ok && i < 11; ++i)
    ok = pts[i].point == Point3{listed[i][0] / 3.0, listed[i][1] / 3.0, listed[i][2] / 3.0};
  return {ok, "counts N=1..20 and the 11 listed points of L_{0,0,3,1}"};
}

Outcome round_trip() {
  return checks_below(identity_report(), {{"adft_round_trip", 1e-10}, {"adft_parallel_vs_naive", 1e-11}});
}

Outcome interpolation() {
  return checks_below(identity_report(),
                      {{"interpolation_constraint", 1e-11}, {"remap_vs_direct", 1e-12}, {"coefficient_count", 0.5}});
}

Outcome identities() {
  const auto r = identity_report();
  auto o = checks_below(r, {{"cyclic_symmetry", 1e-10},
                            {"periodicity", 1e-10},
                            {"diagonal_shift", 1e-10},
                            {"product_of_labels", 1e-10},
                            {"product_of_points", 1e-10},
                            {"symmetrization", 1e-10},
                            {"tilde_we_order", 0.5},
                            {"tilde_we_even", 0.5},
                            {"orbit_table_vs_reflections", 1e-12}});
  return o;
}

Outcome differential_operators() {
  return checks_below(identity_report(),
                      {{"operator_sigma_1", 1e-4}, {"operator_sigma_2", 1e-4}, {"operator_sigma_3", 1e-4}});
}

Outcome table_reproduction() {
  struct Row {
    int N;
    int n;
    double target;
  };
  const Row rows[] = {{7, 128, 266649e-8}, {15, 128, 39178e-8}, {31, 256, 2388e-8}};
  Outcome o{true, ""};
  for (const auto& row : rows) {
    const double err = bump_interpolation_error(row.N, BumpParams{}, {row.n}).error;
    const double rel = std::abs(err - row.target) / row.target;
    o.passed = o.passed && rel < 0.10;
    o.detail += fmt("%sN=%d: %.5e vs %.5e (%.1f%%)", o.detail.empty() ? "" : "; ", row.N, err, row.target, 100 * rel);
  }
  return o;
}

Outcome continuous_orthogonality() {
  const auto labels = enumerate_domain({0, 2});
  const std::size_t L = labels.size();
  auto measure = [&](int n) {
    const auto g = continuous_gram(labels, {n});
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        if (i == j)
          diag = std::max(diag, std::abs(g[i * L + j] - static_cast<double>(weight_g(labels[i]))));
        else
          off = std::max(off, std::abs(g[i * L + j]));
      }
    return std::pair{off, diag};
  };
  const auto [off64, diag64] = measure(64);
  const auto [off128, diag128] = measure(128);
  const bool converging = off128 < off64 && diag128 < diag64;
  return {off128 < 0.02 && converging,
          fmt("n=128: max off-diagonal %.4f, max diagonal error %.4f; n=64: %.4f, %.4f", off128, diag128, off64, diag64)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "discrete orthogonality", 10, discrete_orthogonality},
      {2, "grid combinatorics", 1, grid_combinatorics},
      {3, "transform round trip", 5, round_trip},
      {4, "interpolation proposition", 10, interpolation},
      {5, "identity suite", 5, identities},
      {6, "differential operators", 5, differential_operators},
      {7, "error table reproduction", 600, table_reproduction},
      {8, "continuous orthogonality", 60, continuous_orthogonality},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool passed = o.passed && in_time;
    failures += !passed;
    std::printf("[%s] %d %s: %s (%.2f s, budget %.0f s%s)\n", passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
