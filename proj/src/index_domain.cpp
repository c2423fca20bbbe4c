#include "altexp/index_domain.hpp"

#include <stdexcept>
#include <string>

namespace altexp {

void GridSpec::validate() const {
  if (N < 1) throw std::invalid_argument("grid density N must be >= 1, got " + std::to_string(N));
  if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("grid offset b must lie in [0,1]");
  if (!(T > 0.0)) throw std::invalid_argument("period T must be positive");
}

std::vector<IndexTriple> enumerate_domain(DomainRange range) {
  std::vector<IndexTriple> out;
  if (range.lo > range.hi) return out;
  const int n = range.hi - range.lo + 1;
  out.reserve(domain_size(n));
  for (int k = range.lo; k <= range.hi; ++k)
    for (int l = range.lo; l <= range.hi; ++l)
      for (int m = range.lo; m <= range.hi; ++m)
        if (const IndexTriple t{k, l, m}; is_semidominant(t)) out.push_back(t);
  return out;
}

Point3 grid_coordinate(const GridSpec& grid, const IndexTriple& index) {
  return {grid.coordinate(index.k), grid.coordinate(index.l), grid.coordinate(index.m)};
}

std::vector<GridPoint> grid_points(const GridSpec& grid) {
  grid.validate();
  std::vector<GridPoint> out;
  const auto triples = enumerate_domain({0, grid.N - 1});
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back({t, grid_coordinate(grid, t)});
  return out;
}

DomainIndex::DomainIndex(DomainRange range)
    : range_(range),
      side_(range.hi >= range.lo ? static_cast<std::size_t>(range.hi - range.lo + 1) : 0),
      triples_(enumerate_domain(range)),
      lookup_(side_ * side_ * side_, npos) {
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const auto& t = triples_[i];
    lookup_[(static_cast<std::size_t>(t.k - range_.lo) * side_ + static_cast<std::size_t>(t.l - range_.lo)) *
                side_ +
            static_cast<std::size_t>(t.m - range_.lo)] = i;
  }
}

std::size_t DomainIndex::position(const IndexTriple& t) const {
  auto inside = [&](int v) { return v >= range_.lo && v <= range_.hi; };
  if (!inside(t.k) || !inside(t.l) || !inside(t.m)) return npos;
  return lookup_[(static_cast<std::size_t>(t.k - range_.lo) * side_ + static_cast<std::size_t>(t.l - range_.lo)) *
                     side_ +
                 static_cast<std::size_t>(t.m - range_.lo)];
}

}  // namespace altexp
