#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lr/pairs.hpp"
#include "lr/random.hpp"
#include "lr/rational.hpp"
#include "lr/sym_matrix.hpp"

namespace lr {

/// Symmetric distances on [n], stored over pairs i < j; d(i, i) = 0.
template <typename T>
struct LogMetric {
  int n = 0;
  std::vector<T> d;

  LogMetric() = default;
  explicit LogMetric(int size) : n(size), d(pair_count(size), T(0)) {
    require(size >= 1, ErrorCode::Structural, "metric size must be positive");
  }
  LogMetric(int size, std::vector<T> values) : n(size), d(std::move(values)) {
    require(size >= 1, ErrorCode::Structural, "metric size must be positive");
    require(d.size() == pair_count(size), ErrorCode::Structural,
            "metric length does not match n");
  }

  T operator()(int i, int j) const { return i == j ? T(0) : d[pair_index(n, i, j)]; }
  void set(int i, int j, const T& v) { d[pair_index(n, i, j)] = v; }

  bool operator==(const LogMetric&) const = default;
};

using RatMetric = LogMetric<Rational>;
using RealMetric = LogMetric<double>;

inline RealMetric to_real(const RatMetric& m) {
  RealMetric out(m.n);
  for (std::size_t k = 0; k < m.d.size(); ++k) out.d[k] = m.d[k].get_d();
  return out;
}

inline RatMetric to_rational(const RealMetric& m) {
  RatMetric out(m.n);
  for (std::size_t k = 0; k < m.d.size(); ++k) out.d[k] = rational_from_double(m.d[k]);
  return out;
}

/// d_ij = log p_ij of a matrix with positive off-diagonal entries.
RealMetric log_metric(const RealMatrix& m);

using Quadruple = std::array<int, 4>;  // 0-based

struct TpMembership {
  bool member = true;
  std::optional<Quadruple> violation;  // (i,j,k,l) whose inequality fails
};

/// Condition on all ordered (i,j,k,l), repeats included, with X = p_ij p_kl,
/// Y = p_ik p_jl, Z = p_il p_jk. p = 0: the maximum of X, Y, Z occurs at least
/// twice. p > 0: X^{1/p} <= Y^{1/p} + Z^{1/p}. Exact for rational input when
/// p = 2 or 1/p is an integer, otherwise floating with relative tolerance
/// 1e-9. Domain error for p < 0 or a negative entry.
TpMembership in_delta_tp(const RatMatrix& m, const Rational& p);
TpMembership in_delta_tp(const RealMatrix& m, double p);

/// Smallest delta with d_ij + d_kl <= max(d_ik + d_jl, d_il + d_jk) + 2 delta.
Rational hyperbolicity_delta(const RatMetric& d);
double hyperbolicity_delta(const RealMetric& d);

struct FourPointReport {
  bool holds = true;
  std::optional<Quadruple> violation;
};

/// Four-point condition over all 4-multisets. Repeated points make it imply
/// nonnegativity and the triangle inequality. The float version allows an
/// absolute slack of 1e-9.
FourPointReport four_point_check(const RatMetric& d);
FourPointReport four_point_check(const RealMetric& d);

bool is_metric(const RatMetric& d);
bool is_metric(const RealMetric& d);

/// Shortest-path metric; the largest metric below d.
RatMetric metric_closure(const RatMetric& d);
RealMetric metric_closure(const RealMetric& d);

template <typename T>
struct TreeApproximation {
  LogMetric<T> metric;     // the tree metric d'
  T delta{0};              // hyperbolicity of the input
  T bound{0};              // 2 delta ceil(log2 n)
  T max_gap{0};            // max(d - d')
  bool closure_applied = false;
  T closure_gap{0};        // max(d - closure(d)); every tree metric below d has at least this gap
};

/// Gromov products at the basepoint, their maximin closure along a maximum
/// spanning tree, and d'_xy = d_xw + d_yw - 2 g'_xy. Inputs that are not
/// metrics are first replaced by their shortest-path closure so that the
/// result stays a tree metric below d. Domain error for a basepoint outside
/// [0, n) or a negative distance.
TreeApproximation<Rational> gromov_tree_approx(const RatMetric& d, int basepoint = 0);
TreeApproximation<double> gromov_tree_approx(const RealMetric& d, int basepoint = 0);

/// Tree with labels 0..n-1 placed on vertices. Labels can sit on internal
/// vertices (after zero-length edges are contracted) and several labels can
/// share a vertex when their distance is 0. Every unlabeled vertex has
/// degree >= 3.
struct PhyloTree {
  struct Edge {
    int u = 0;
    int v = 0;
    Rational len;
    bool operator==(const Edge&) const = default;
  };
  int vertex_count = 0;
  std::vector<int> label_vertex;  // label -> vertex
  std::vector<Edge> edges;

  int leaf_count() const { return static_cast<int>(label_vertex.size()); }
  bool operator==(const PhyloTree&) const = default;
};

/// Structural error unless connected, acyclic, lengths >= 0 and unlabeled
/// vertices have degree >= 3.
void validate(const PhyloTree& tree);

/// Edge indices along the path between two vertices.
std::vector<std::size_t> path_edges(const PhyloTree& tree, int from, int to);

RatMetric tree_metric(const PhyloTree& tree);

/// Contracts zero-length edges, prunes unlabeled leaves, smooths unlabeled
/// degree-2 vertices and renumbers vertices deterministically (labeled
/// vertices by smallest label, then internal vertices in breadth-first order).
PhyloTree canonicalize(const PhyloTree& tree);

/// The unique tree realizing a four-point metric, by leaf insertion.
/// Domain error naming a violating quadruple otherwise.
PhyloTree tree_reconstruct(const RatMetric& d);

struct CutTerm {
  Subset subset = 0;  // complement-normalized
  Rational weight;
  bool operator==(const CutTerm&) const = default;
};

/// One term per positive-length edge: the labels on root_leaf's side after
/// removing the edge. Sum of weight * delta(subset) equals tree_metric(tree).
std::vector<CutTerm> cut_decomposition(const PhyloTree& tree, int root_leaf = 0);

/// Sum of weight * delta(S) as a metric on n points.
RatMetric cut_sum(int n, const std::vector<CutTerm>& terms);

/// Random tree on n labels with lengths k/q, k in [0, max_numerator],
/// q in [1, 4]; returned in canonical form.
PhyloTree random_tree(int n, SplitRng& rng, int max_numerator = 12);

std::string format_quadruple(const Quadruple& q);

}  // namespace lr
