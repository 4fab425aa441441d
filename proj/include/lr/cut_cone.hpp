#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lr/double_description.hpp"
#include "lr/pairs.hpp"
#include "lr/parallel.hpp"

namespace lr {

/// delta(S): coords[pair_index(i,j)] = 1 iff exactly one of i, j lies in S.
/// The stored subset is complement-normalized (element 0 never in it).
struct CutVector {
  int n = 0;
  Subset subset = 0;
  std::vector<int> coords;
  bool is_generator = false;  // false for the zero vector of S = {} or [n]

  bool operator==(const CutVector&) const = default;
};

/// Throws Domain if S has bits outside [n] or n is outside [1, 20].
CutVector cut_vector(int n, Subset s);

/// The 2^{n-1} - 1 nonzero canonical cut vectors, ordered by subset mask.
/// Capability error unless 2 <= n <= 8.
std::vector<CutVector> cut_cone_rays(int n);

/// Integer pair vector with coprime entries, oriented so that
/// coords . delta(S) <= 0 for every cut.
struct FacetNormal {
  int n = 0;
  IntVector coords;

  bool operator==(const FacetNormal&) const = default;
  auto operator<=>(const FacetNormal&) const = default;
};

/// Facets of Cut_n as the extreme rays of its dual cone, sorted
/// lexicographically. 3 <= n <= 7 (Capability otherwise); n = 7 is slow.
std::vector<FacetNormal> enumerate_facets(int n, const DDOptions& options = {});

struct Orbit {
  FacetNormal representative;
  std::size_t size = 0;
};

struct OrbitReport {
  int n = 0;
  std::vector<Orbit> orbits;  // by size descending, then representative
  std::size_t total = 0;
};

inline constexpr int kMaxOrbitSize = 8;

/// Lexicographic minimum of the pair vector over all vertex permutations.
IntVector canonical_form(int n, const IntVector& coords);

/// Groups normals into S_n orbits. Structural error if some normal has a
/// different n or the wrong length; Capability error for n > 8.
OrbitReport orbit_classify(int n, const std::vector<FacetNormal>& normals,
                           unsigned threads = default_threads());

/// (h_i h_j)_{i<j}. Domain error unless sum(h) = 1. The result is checked
/// against every cut and an InvariantViolation is raised if one is positive.
IntVector hypermetric_ratio(const std::vector<std::int64_t>& h);

/// a . delta(S) computed on the fly from the subset.
template <typename Vec>
auto cut_dot(int n, const Vec& a, Subset s) {
  typename Vec::value_type total{0};
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (contains(s, i) != contains(s, j)) total += a[k];
  return total;
}

}  // namespace lr
