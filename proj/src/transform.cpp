#include "altexp/transform.hpp"

#include <stdexcept>
#include <sstream>
#include <string>

#include "altexp/alt_functions.hpp"
#include "altexp/errors.hpp"
#include "altexp/kernels.hpp"

namespace altexp {

std::string_view to_string(CoefficientRole role) {
  switch (role) {
    case CoefficientRole::beta:
      return "beta";
    case CoefficientRole::c_alt:
      return "c_alt";
    case CoefficientRole::c_std:
      return "c_std";
  }
  return "beta";
}

CoefficientRole role_from_string(std::string_view name) {
  if (name == "beta") return CoefficientRole::beta;
  if (name == "c_alt") return CoefficientRole::c_alt;
  if (name == "c_std") return CoefficientRole::c_std;
  throw std::invalid_argument("unknown coefficient role '" + std::string(name) + "'");
}

namespace {

void require_unit_period(const GridSpec& grid) {
  grid.validate();
  if (grid.T != 1.0) throw std::invalid_argument("alternating transforms are defined on L_{a,b,N,1}; got T != 1");
}

// Values of `map` in the enumeration order of `domain`, with the key set
// checked against the domain exactly.
std::vector<Complex> dense_over(const std::map<IndexTriple, Complex>& map, const DomainIndex& domain,
                                const char* what_kind) {
  for (const auto& [key, value] : map)
    if (domain.position(key) == DomainIndex::npos) {
      std::ostringstream os;
      os << what_kind << " key " << key << " lies outside the index domain";
      throw DimensionError(os.str());
    }
  std::vector<Complex> dense;
  dense.reserve(domain.size());
  for (const auto& key : domain.triples()) {
    const auto it = map.find(key);
    if (it == map.end()) throw MissingEntryError(what_kind, key);
    dense.push_back(it->second);
  }
  return dense;
}

}  // namespace

namespace detail {

std::vector<Complex> dense_samples(const SampleSet& samples) {
  require_unit_period(samples.grid);
  const DomainIndex domain({0, samples.grid.N - 1});
  return dense_over(samples.values, domain, "sample");
}

std::vector<Complex> alternating_analysis(const GridSpec& grid, const std::vector<Complex>& dense,
                                          DomainRange range) {
  const int N = grid.N;
  const DomainIndex domain({0, N - 1});
  if (dense.size() != domain.size()) throw DimensionError("sample count does not match the grid");

  // Every cube point is a cyclic rotation of exactly one lattice point; the
  // diagonal points are hit three times with weight 1/3. The weighted sum
  // over the lattice is therefore a plain sum over the cube.
  const auto n = static_cast<std::size_t>(N);
  std::vector<Complex> cube(n * n * n);
  std::size_t at = 0;
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      for (int t = 0; t < N; ++t) cube[at++] = dense[domain.position(canonicalize(IndexTriple{r, s, t}))];

  const auto table = kernels::PhaseTable::lattice(grid, range.lo, range.hi, /*conjugate=*/true);
  const auto transformed = kernels::analyze(cube, table, table, table);

  const double volume = static_cast<double>(N) * N * N;
  const auto keys = enumerate_domain(range);
  std::vector<Complex> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(transformed.at(key.k, key.l, key.m) / (weight_g(key) * volume));
  return out;
}

}  // namespace detail

CoefficientSet adft_forward(const SampleSet& samples) {
  const auto dense = detail::dense_samples(samples);
  const DomainRange range{0, samples.grid.N - 1};
  const auto values = detail::alternating_analysis(samples.grid, dense, range);
  CoefficientSet out{samples.grid, CoefficientRole::beta, std::nullopt, {}};
  const auto keys = enumerate_domain(range);
  for (std::size_t i = 0; i < keys.size(); ++i) out.values.emplace_hint(out.values.end(), keys[i], values[i]);
  return out;
}

SampleSet adft_inverse(const CoefficientSet& beta) {
  require_unit_period(beta.grid);
  if (beta.role != CoefficientRole::beta) throw std::invalid_argument("adft_inverse expects role beta");
  const int N = beta.grid.N;
  const DomainIndex domain({0, N - 1});
  const auto dense = dense_over(beta.values, domain, "coefficient");

  // E_klm contributes e(kx+ly+mz) + e(lx+my+kz) + e(mx+ky+lz).
  kernels::DenseCube cube(0, N - 1);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& t = domain.triples()[i];
    cube.at(t.k, t.l, t.m) += dense[i];
    cube.at(t.l, t.m, t.k) += dense[i];
    cube.at(t.m, t.k, t.l) += dense[i];
  }
  const auto table = kernels::PhaseTable::lattice(beta.grid, 0, N - 1);
  const auto values = kernels::synthesize(cube, table, table, table);

  SampleSet out{beta.grid, {}};
  const auto n = static_cast<std::size_t>(N);
  for (const auto& t : domain.triples())
    out.values.emplace_hint(out.values.end(), t,
                            values[(static_cast<std::size_t>(t.k) * n + static_cast<std::size_t>(t.l)) * n +
                                   static_cast<std::size_t>(t.m)]);
  return out;
}

GramMatrix discrete_gram(const GridSpec& grid) {
  require_unit_period(grid);
  const auto points = grid_points(grid);
  const std::size_t P = points.size();
  GramMatrix gram;
  gram.keys = enumerate_domain({0, grid.N - 1});
  gram.entries.assign(P * P, Complex{});

  std::vector<Complex> values(P * P);  // [point][key]
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t j = 0; j < P; ++j) values[p * P + j] = eval_E(gram.keys[j], points[p].point);

#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(P); ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < P; ++j) {
      Complex acc{};
      for (std::size_t p = 0; p < P; ++p)
        acc += values[p * P + ui] * std::conj(values[p * P + j]) / static_cast<double>(weight_g(points[p].index));
      gram.entries[ui * P + j] = acc;
    }
  }
  return gram;
}

}  // namespace altexp
