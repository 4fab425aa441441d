#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "lr/lorentzian.hpp"
#include "lr/parallel.hpp"
#include "lr/ratios.hpp"

namespace lr {

/// Weights on the triangular ratios 23|1, 13|2, 12|3; nonnegative with sum 1.
struct BarycentricRatio {
  double a = 0;
  double b = 0;
  double c = 0;
};

/// Domain error unless a, b, c >= 0 and |a + b + c - 1| <= 1e-12.
void validate(const BarycentricRatio& q);

/// a^2 + b^2 + c^2 - 2ab - 2ac - 2bc; f = 1 exactly where this is <= 0.
double circle_discriminant(const BarycentricRatio& q);

/// Optimal constant f(a,b,c) on 3x3 Lorentzian matrices: 1 on and inside the
/// inscribed circle, otherwise 2 a^a b^b c^c (2a-1)^{2a-1} (1-2b)^{2b-1}
/// (1-2c)^{2c-1} with a the largest weight, evaluated in the log domain with
/// 0 log 0 = 0. Within 1e-12 of the circle both branches are evaluated and
/// an InvariantViolation is raised if they disagree.
double theorem_c(const BarycentricRatio& q);

struct N3Maximum {
  double value = 0;
  double x = 0;
  double y = 0;
  bool critical_point_used = false;  // the closed-form critical point won
};

/// Independent numerical maximum of r(x,y) = x^b y^c (1 + sqrt((1-x)(1-y)))^{a-b-c}
/// over [0,1]^2 with a the largest weight: grid scan, local refinement and
/// the closed-form critical point when it lies in the square.
N3Maximum verify_n3(const BarycentricRatio& q, int grid = 2001, unsigned threads = default_threads());

/// Optimal constant on Delta_3(T_p): 2^{ap}, 2^{bp}, 2^{cp} when that weight
/// exceeds the sum of the other two, else 2^{p(a+b+c)/2}. Domain error for a
/// negative weight or p < 0.
double fp_delta3(double a, double b, double c, double p);

struct HardLemmaQuantities {
  Rational X, Y, Z;
};

struct HardLemmaResult {
  HardLemmaQuantities quantities;
  bool applicable = false;  // X, Y, Z >= 0
  bool holds = true;        // applicable implies XYZ < 32 x1 x2 x3 y1 y2 y3
  Rational lhs, rhs;        // XYZ and 32 prod(x) prod(y)
};

/// Exact evaluation; Domain error unless every input is positive.
HardLemmaResult hard_lemma_check(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y);

struct SupEstimate {
  double value = 0;
  std::optional<Rational> exact;  // set when the winning value was computed exactly
  RatMatrix argmax;
  std::string source;             // "rank2 sample i", "pentagonal witness t=...", ...
};

/// Maximizes the ratio over seeded rank-2 samples and, when the ratio is a
/// positive multiple of a relabelled pentagonal (n = 5) or triangular
/// (n = 3) ratio, over the matching witness family. Domain error for an
/// unbounded ratio. Never a claim of optimality.
SupEstimate estimate_sup(const FullRatio& r, std::uint64_t iterations, std::uint64_t seed,
                         const SamplerConfig& sampler = {}, unsigned threads = default_threads());

/// Rank-2 (det 0) Lorentzian matrix [[e,1,1],[1,e,1],[1,1,2/(1+e)]] on which
/// the triangular ratio 12|3 equals 2/(1+e). Domain error unless 0 < e < 1.
RatMatrix witness_triangular(const Rational& eps);

/// If r = c * sigma(base) for some c > 0 and vertex relabelling sigma,
/// returns c and sigma (sigma[i] is the image of vertex i).
struct RelabelledMultiple {
  Rational factor;
  std::vector<int> sigma;
};
std::optional<RelabelledMultiple> match_relabelled(const ReducedRatio& r, const ReducedRatio& base);

/// (p_{sigma(i) sigma(j)}) = (m_ij).
RatMatrix relabel(const RatMatrix& m, const std::vector<int>& sigma);

}  // namespace lr
