#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lr/cut_cone.hpp"
#include "lr/pairs.hpp"
#include "lr/rational.hpp"
#include "lr/sym_matrix.hpp"

namespace lr {

/// Off-diagonal exponents alpha_ij, i < j, in pair order.
struct ReducedRatio {
  int n = 0;
  std::vector<Rational> coords;

  bool operator==(const ReducedRatio&) const = default;
};

/// Full exponent vector; diag[i] is alpha_ii. Balanced means
/// 2 alpha_ii = -sum_{j != i} alpha_ij for every i.
struct FullRatio {
  int n = 0;
  std::vector<Rational> offdiag;
  std::vector<Rational> diag;

  bool operator==(const FullRatio&) const = default;
};

struct BoundednessCertificate {
  bool bounded = true;
  std::optional<Subset> violating_subset;
  Rational violation;                 // alpha . delta(S) at the violating subset
  std::vector<Subset> tight_subsets;  // canonical S with alpha . delta(S) = 0
};

ReducedRatio reduced_from_ints(int n, const IntVector& coords);
inline ReducedRatio to_ratio(const FacetNormal& f) { return reduced_from_ints(f.n, f.coords); }

FullRatio complete_diagonal(const ReducedRatio& r);
inline ReducedRatio reduce(const FullRatio& r) { return ReducedRatio{r.n, r.offdiag}; }

bool is_balanced(const FullRatio& r);
/// Structural error when lengths disagree with n or the diagonal is unbalanced.
void validate(const FullRatio& r);

FullRatio add(const FullRatio& a, const FullRatio& b);
FullRatio scaled(const FullRatio& r, const Rational& c);
ReducedRatio scaled(const ReducedRatio& r, const Rational& c);

enum class RatioKind { AlexandrovFenchel, Triangular, Pentagonal };

/// Named families with 0-based indices:
///   AlexandrovFenchel {i, j}:        e_ii + e_jj - 2 e_ij
///   Triangular {i, j, k}  (ij|k):    e_ij + e_kk - e_ik - e_jk
///   Pentagonal {i, j, k, l, m} (ijk|lm):
///     e_ij + e_ik + e_jk + e_ll + e_lm + e_mm - e_il - e_jl - e_kl - e_im - e_jm - e_km
/// Repeated indices are allowed and collapse term by term, so the usual
/// degenerations come out automatically. Domain error when an index is out of
/// range, the count is wrong, or the collapsed ratio is zero.
FullRatio named_ratio(RatioKind kind, const std::vector<int>& indices, int n);

template <typename T>
struct RatioValue {
  T value;
  bool zero_pow_zero = false;  // some 0^0 factor was read as 1
};

bool has_integral_exponents(const FullRatio& r);

/// Exact product of p_ij^alpha_ij over i <= j. Needs integral exponents
/// (Domain otherwise) and no zero base under a negative exponent.
RatioValue<Rational> evaluate(const FullRatio& r, const RatMatrix& m);

/// Floating evaluation in the log domain; accepts rational exponents on
/// positive bases. Zero bases with positive exponent give 0.
RatioValue<double> evaluate(const FullRatio& r, const RealMatrix& m);

/// Exact comparison of the ratio value against c when exponents are
/// rational: with q the common denominator, tests value^q <= c^q.
bool value_at_most(const FullRatio& r, const RatMatrix& m, const Rational& c);

/// Dot products against every canonical cut, n <= 20.
BoundednessCertificate is_bounded(const ReducedRatio& r);

/// Rank of the span of the tight cut vectors.
int tight_rank(int n, const std::vector<Subset>& tight_subsets);

/// r scaled to coordinate sum -1. Domain error for the zero ratio or an
/// unbounded ratio with sum >= 0; InvariantViolation for a bounded nonzero
/// ratio whose sum is not negative.
ReducedRatio normalize_ratio(const ReducedRatio& r);

using Decomposition = std::vector<std::pair<std::size_t, long>>;

/// Nonnegative integral combination of basis elements equal to r, found by
/// depth-first search whose residual must stay bounded. Basis entries are
/// facet normals of the same n. Domain error for non-integral or unbounded
/// input. Returns nullopt if no combination with total coefficient at most
/// sum |alpha_ij| exists.
std::optional<Decomposition> decompose(const FullRatio& r, const std::vector<FacetNormal>& basis);

}  // namespace lr
