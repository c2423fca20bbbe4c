#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "altexp/index_domain.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// Function values on L_{a,b,N,1}, keyed by lattice index (r,s,t).
struct SampleSet {
  GridSpec grid;
  std::map<IndexTriple, Complex> values;

  /// Samples of `fn` at every point of the grid.
  template <typename Fn>
  static SampleSet from_function(const GridSpec& grid, Fn&& fn) {
    SampleSet s{grid, {}};
    for (const auto& gp : grid_points(grid)) s.values.emplace(gp.index, fn(gp.point));
    return s;
  }
};

enum class CoefficientRole { beta, c_alt, c_std };

std::string_view to_string(CoefficientRole role);
/// Throws std::invalid_argument for unknown names.
CoefficientRole role_from_string(std::string_view name);

/// Expansion coefficients. `beta` is keyed over D^e_+(0,N-1), `c_alt` over
/// D^e_+(-M,M) and `c_std` over [-M,M]^3, with N = 2M+1 for the last two.
struct CoefficientSet {
  GridSpec grid;
  CoefficientRole role = CoefficientRole::beta;
  std::optional<int> M;
  std::map<IndexTriple, Complex> values;
};

/// Weighted Gram matrix of the E functions on the grid, rows and columns in
/// enumeration order of D^e_+(0,N-1).
struct GramMatrix {
  std::vector<IndexTriple> keys;
  std::vector<Complex> entries;  // row-major, keys.size()^2

  Complex operator()(std::size_t row, std::size_t col) const { return entries[row * keys.size() + col]; }
};

/// Alternating discrete Fourier transform
///   beta_klm = 1/(G_klm N^3) sum_{(r,s,t)} G_rst^{-1} f(x_r,y_s,z_t) conj(E_klm(x_r,y_s,z_t)).
/// Requires T = 1 and the full key set D^e_+(0,N-1); throws MissingEntryError
/// naming the first absent key, DimensionError for keys outside the domain.
CoefficientSet adft_forward(const SampleSet& samples);

/// f(x_r,y_s,z_t) = sum beta_klm E_klm(x_r,y_s,z_t) over the grid of `beta`.
SampleSet adft_inverse(const CoefficientSet& beta);

/// Sum over the grid of G_rst^{-1} E_klm conj(E_k'l'm'); equals G_klm N^3 on
/// the diagonal and vanishes elsewhere.
GramMatrix discrete_gram(const GridSpec& grid);

namespace detail {

/// Dense samples in enumeration order; validates T, key set and completeness.
std::vector<Complex> dense_samples(const SampleSet& samples);

/// c_key = 1/(G_key N^3) sum_rst G_rst^{-1} f_rst conj(E_key(x_r,y_s,z_t)) for
/// every key of D^e_+(range). Used by the transform and by interpolation.
std::vector<Complex> alternating_analysis(const GridSpec& grid, const std::vector<Complex>& dense,
                                          DomainRange range);

}  // namespace detail

}  // namespace altexp
