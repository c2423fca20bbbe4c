#pragma once

#include <cstddef>
#include <vector>

#include "altexp/types.hpp"

namespace altexp {

/// (k,l,m) is semidominant when k >= l >= m or l > k > m. Exact comparison,
/// also for real labels.
template <typename T>
constexpr bool is_semidominant(const Triple<T>& t) {
  return (t.k >= t.l && t.l >= t.m) || (t.l > t.k && t.k > t.m);
}

/// The unique semidominant cyclic rotation of t. Triples containing NaN
/// have none and are returned unchanged.
template <typename T>
constexpr Triple<T> canonicalize(const Triple<T>& t) {
  Triple<T> r = t;
  for (int i = 0; i < 3; ++i) {
    if (is_semidominant(r)) return r;
    r = rotate(r);
  }
  return t;
}

/// Inclusive index range {N1,...,N2} for D^e_+(N1,N2).
struct DomainRange {
  int lo = 0;
  int hi = 0;
};

/// Semidominant triples with entries in the range, lexicographic in (k,l,m).
/// An empty range (lo > hi) yields an empty list.
std::vector<IndexTriple> enumerate_domain(DomainRange range);

/// |D^e_+(0,N-1)| = N(N^2+2)/3.
constexpr std::size_t domain_size(int N) {
  const auto n = static_cast<std::size_t>(N < 0 ? 0 : N);
  return n * (n * n + 2) / 3;
}

/// Orbit-size weight G_klm: 3 on the diagonal k=l=m, 1 otherwise.
constexpr int weight_g(const IndexTriple& t) { return (t.k == t.l && t.l == t.m) ? 3 : 1; }

struct GridPoint {
  IndexTriple index;
  Point3 point;
};

/// Point (r,s,t) of L_{a,b,N,T}.
Point3 grid_coordinate(const GridSpec& grid, const IndexTriple& index);

/// All points of L_{a,b,N,T}, ordered like enumerate_domain({0, N-1}).
std::vector<GridPoint> grid_points(const GridSpec& grid);

/// Membership in F = {(x,y,z) in (0,1)^3 : x > z, y > z}.
constexpr bool in_fundamental_domain(const Point3& p) {
  return p.x > 0.0 && p.x < 1.0 && p.y > 0.0 && p.y < 1.0 && p.z > 0.0 && p.z < 1.0 && p.x > p.z &&
         p.y > p.z;
}

/// Dense lookup from a triple of D^e_+(lo,hi) to its enumeration position.
class DomainIndex {
 public:
  explicit DomainIndex(DomainRange range);

  const std::vector<IndexTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

  /// Position in enumeration order, or npos for triples outside the domain.
  std::size_t position(const IndexTriple& t) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  DomainRange range_;
  std::size_t side_;
  std::vector<IndexTriple> triples_;
  std::vector<std::size_t> lookup_;
};

}  // namespace altexp
