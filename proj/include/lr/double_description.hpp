#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lr {

using IntVector = std::vector<std::int64_t>;

struct DDOptions {
  enum class Adjacency {
    Combinatorial,  // no third ray is tight on the common zero set
    Algebraic,      // the common zero set has rank dim - 2
  };
  enum class Ordering {
    MinZeros,  // next inequality: fewest rays lying on its hyperplane
    Static,    // input order
  };

  Adjacency adjacency = Adjacency::Combinatorial;
  Ordering ordering = Ordering::MinZeros;
  /// Abort with ResourceLimit once the working ray set would exceed this many
  /// megabytes. 0 means: read LR_RESOURCE_LIMIT_MB, unlimited when unset.
  std::size_t memory_limit_mb = 0;
  /// Abort with ResourceLimit after this many seconds (0 = no limit).
  double time_limit_seconds = 0.0;
};

/// Progress snapshot attached to ResourceLimit errors.
struct DDProgress {
  std::size_t constraints_processed = 0;
  std::size_t constraints_total = 0;
  std::size_t rays = 0;
};

inline constexpr std::size_t kMaxDDConstraints = 128;
using TightSet = std::bitset<kMaxDDConstraints>;

/// Extreme rays of the pointed cone {x : a.x <= 0 for every row a}, computed by
/// the double description method in exact integer arithmetic. Every ray is
/// returned as a primitive integer vector; the list is sorted
/// lexicographically. Throws Capability if the rows do not have full column
/// rank (cone not pointed) or an intermediate coefficient overflows 64 bits,
/// and ResourceLimit when a configured budget is exceeded.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints,
                                    const DDOptions& options = {});

/// Memory budget from LR_RESOURCE_LIMIT_MB, 0 when unset or unparsable.
std::size_t resource_limit_from_env();

}  // namespace lr
