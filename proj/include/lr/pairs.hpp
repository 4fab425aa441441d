#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lr/error.hpp"

namespace lr {

/// Bitmask over [n]; bit i is the 0-based element i (printed as i+1).
using Subset = std::uint32_t;

inline constexpr int kMaxSubsetSize = 20;

/// Number of unordered pairs i < j on n points.
constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Lexicographic position of the pair {i, j}, i != j, 0-based:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * n - i - 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

/// Inverse of pair_index; cheap enough for the sizes used here.
std::pair<int, int> pair_at(int n, std::size_t index);

/// All pairs in lexicographic order.
std::vector<std::pair<int, int>> pairs_of(int n);

/// "i,j" with 1-based labels, the key format of the JSON schemas.
std::string pair_key(int i, int j);

/// Parses "i,j" (1-based) into a 0-based pair with i < j.
std::pair<int, int> parse_pair_key(const std::string& key, int n);

inline bool contains(Subset s, int i) { return ((s >> i) & 1u) != 0; }

inline Subset full_set(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

/// Representative of {S, [n]\S} that excludes element 0.
inline Subset complement_normalized(int n, Subset s) {
  return contains(s, 0) ? (full_set(n) & ~s) : s;
}

/// 1-based element list, e.g. {0,2} -> [1,3].
std::vector<int> subset_elements(Subset s);

std::string format_subset(Subset s);

}  // namespace lr
