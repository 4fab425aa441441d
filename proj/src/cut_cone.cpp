#include "lr/cut_cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "lr/error.hpp"

namespace lr {

CutVector cut_vector(int n, Subset s) {
  require(n >= 1 && n <= kMaxSubsetSize, ErrorCode::Domain, "cut vectors need 1 <= n <= 20",
          "n=" + std::to_string(n));
  require((s & ~full_set(n)) == 0, ErrorCode::Domain, "subset has elements outside [n]");
  CutVector v;
  v.n = n;
  v.subset = complement_normalized(n, s);
  v.coords.assign(pair_count(n), 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (contains(v.subset, i) != contains(v.subset, j)) v.coords[k] = 1;
  v.is_generator = v.subset != 0;
  return v;
}

std::vector<CutVector> cut_cone_rays(int n) {
  require(n >= 2 && n <= 8, ErrorCode::Capability, "cut cone rays supported for 2 <= n <= 8",
          "n=" + std::to_string(n));
  std::vector<CutVector> rays;
  // Canonical subsets avoid element 0: masks 2, 4, ..., 2^n - 2.
  for (Subset s = 2; s < (Subset{1} << n); s += 2) rays.push_back(cut_vector(n, s));
  return rays;
}

std::vector<FacetNormal> enumerate_facets(int n, const DDOptions& options) {
  require(n >= 3 && n <= 7, ErrorCode::Capability, "facet enumeration supported for 3 <= n <= 7",
          "n=" + std::to_string(n));
  std::vector<IntVector> rows;
  for (const auto& c : cut_cone_rays(n)) rows.emplace_back(c.coords.begin(), c.coords.end());
  std::vector<FacetNormal> facets;
  for (auto& r : extreme_rays(rows, options)) facets.push_back(FacetNormal{n, std::move(r)});
  return facets;
}

namespace {

/// For each vertex permutation, the induced map on pair positions.
std::vector<std::vector<std::size_t>> pair_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    std::vector<std::size_t> map(pair_count(n));
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k) map[k] = pair_index(n, perm[i], perm[j]);
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

IntVector canonical_with(const IntVector& coords,
                         const std::vector<std::vector<std::size_t>>& perms) {
  IntVector best = coords;
  IntVector candidate(coords.size());
  for (const auto& map : perms) {
    for (std::size_t k = 0; k < coords.size(); ++k) candidate[map[k]] = coords[k];
    if (candidate < best) best = candidate;
  }
  return best;
}

void check_orbit_size(int n) {
  require(n >= 2 && n <= kMaxOrbitSize, ErrorCode::Capability,
          "orbit classification supported for 2 <= n <= 8", "n=" + std::to_string(n));
}

}  // namespace

IntVector canonical_form(int n, const IntVector& coords) {
  check_orbit_size(n);
  require(coords.size() == pair_count(n), ErrorCode::Structural,
          "pair vector length does not match n");
  return canonical_with(coords, pair_permutations(n));
}

OrbitReport orbit_classify(int n, const std::vector<FacetNormal>& normals, unsigned threads) {
  check_orbit_size(n);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    require(normals[i].n == n, ErrorCode::Structural, "facet normals have mixed n",
            "index " + std::to_string(i));
    require(normals[i].coords.size() == pair_count(n), ErrorCode::Structural,
            "facet normal length does not match n", "index " + std::to_string(i));
  }
  auto perms = pair_permutations(n);
  std::vector<IntVector> canon(normals.size());
  parallel_for(normals.size(), threads,
               [&](std::size_t i) { canon[i] = canonical_with(normals[i].coords, perms); });
  std::map<IntVector, std::size_t> counts;
  for (auto& c : canon) ++counts[c];

  OrbitReport report;
  report.n = n;
  report.total = normals.size();
  for (auto& [rep, size] : counts) report.orbits.push_back(Orbit{FacetNormal{n, rep}, size});
  std::stable_sort(report.orbits.begin(), report.orbits.end(),
                   [](const Orbit& a, const Orbit& b) { return a.size > b.size; });
  return report;
}

IntVector hypermetric_ratio(const std::vector<std::int64_t>& h) {
  const int n = static_cast<int>(h.size());
  require(n >= 2 && n <= kMaxSubsetSize, ErrorCode::Capability,
          "hypermetric vectors supported for 2 <= n <= 20", "n=" + std::to_string(n));
  std::int64_t sum = std::accumulate(h.begin(), h.end(), std::int64_t{0});
  require(sum == 1, ErrorCode::Domain, "hypermetric vector must sum to 1",
          "sum=" + std::to_string(sum));
  IntVector alpha;
  alpha.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) alpha.push_back(h[i] * h[j]);
  // h(S)(1 - h(S)) <= 0 for integral h(S); confirm it on every cut anyway.
  for (Subset s = 2; s < (Subset{1} << n); s += 2) {
    if (cut_dot(n, alpha, s) > 0)
      fail(ErrorCode::InvariantViolation, "hypermetric ratio is positive on a cut",
           format_subset(s));
  }
  return alpha;
}

}  // namespace lr
