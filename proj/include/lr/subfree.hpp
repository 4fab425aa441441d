#pragma once

#include <vector>

#include "lr/parallel.hpp"
#include "lr/poly.hpp"
#include "lr/ratios.hpp"

namespace lr {

struct SubfreeReport {
  bool holds = true;                         // no negative coefficient
  std::vector<IntPoly::Term> negative_terms; // graded-lex order
  std::size_t term_count = 0;
  int diagonal_sum = 0;                      // s = sum of alpha_ii
  bool rearranged = false;                   // s < 0: 2^{-s} moved onto the positive part
  IntPoly difference;
};

/// With p_ij = a_i b_j + a_j b_i (diagonal included) expands
///   2^s prod_{alpha_ij < 0} p_ij^{-alpha_ij} - prod_{alpha_ij > 0} p_ij^{alpha_ij}
/// and reports the sign of every coefficient. For s < 0 the power of two
/// multiplies the second product instead. Domain error for non-integral
/// exponents or an unbounded ratio.
SubfreeReport subfree_check(const FullRatio& r);

/// One report per ratio, checked in parallel.
std::vector<SubfreeReport> subfree_check_all(const std::vector<FullRatio>& ratios,
                                             unsigned threads = default_threads());

}  // namespace lr
