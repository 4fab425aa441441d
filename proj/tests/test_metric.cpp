#include "doctest.h"

#include <cmath>

#include "lr/error.hpp"
#include "lr/lorentzian.hpp"
#include "lr/metric.hpp"

using namespace lr;

namespace {

RatMetric constant_metric(int n, Rational v) {
  RatMetric d(n);
  for (auto& x : d.d) x = v;
  return d;
}

PhyloTree star(int n, Rational len) {
  PhyloTree t;
  t.vertex_count = n + 1;
  for (int a = 0; a < n; ++a) {
    t.label_vertex.push_back(a);
    t.edges.push_back({a, n, len});
  }
  return t;
}

// Tree with labels {1,2} on vertex 0 and {3,4} on vertex 1, one edge.
PhyloTree split_12_34(Rational len) {
  PhyloTree t;
  t.vertex_count = 2;
  t.label_vertex = {0, 0, 1, 1};
  t.edges = {{0, 1, len}};
  return t;
}

RealMetric normalized_log(const RatMatrix& m) { return log_metric(normalize_diagonal(to_real(m))); }

}  // namespace

TEST_CASE("T_p membership") {
  RatMatrix ones(std::vector<std::vector<Rational>>(4, std::vector<Rational>(4, 1)));
  CHECK(in_delta_tp(ones, 0).member);
  CHECK(in_delta_tp(to_real(ones), 0.0).member);

  CHECK(in_delta_tp(witness_tp(2.0), 2.0).member);
  CHECK(in_delta_tp(witness_tp_exact(2), 2).member);
  CHECK(in_delta_tp(witness_tp_exact(4), 4).member);
  CHECK(in_delta_tp(witness_tp(3.0), 3.0).member);

  // p_12 p_34 dominates: (1,2,3,4) fails for p = 1.
  RatMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, 1);
  m.set(0, 1, 10);
  auto r = in_delta_tp(m, 1);
  CHECK_FALSE(r.member);
  REQUIRE(r.violation);
  CHECK(format_quadruple(*r.violation) == "(1,2,3,3)");
  CHECK_FALSE(in_delta_tp(m, 2).member);
  CHECK_FALSE(in_delta_tp(m, 0).member);
  CHECK(in_delta_tp(m, Rational(1, 4)).member == in_delta_tp(to_real(m), 0.25).member);

  CHECK_THROWS_AS(in_delta_tp(m, -1), Error);
  CHECK_THROWS_AS(in_delta_tp(to_real(m), -0.5), Error);
}

TEST_CASE("rank-2 matrices lie in Delta(T_2)") {
  SplitRng root(2);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    SplitRng rng = root.split(s);
    int n = static_cast<int>(rng.uniform_int(3, 8));
    CHECK(in_delta_tp(sample_rank2(n, rng), 2).member);
  }
}

TEST_CASE("exponentiated tree metrics are Lorentzian") {
  SplitRng root(3);
  for (std::uint64_t s = 0; s < 200; ++s) {
    SplitRng rng = root.split(s);
    int n = static_cast<int>(rng.uniform_int(2, 7));
    PhyloTree t = random_tree(n, rng);
    std::vector<Rational> w(t.edges.size());
    for (auto& x : w) x = make_rational(rng.uniform_int(4, 40), 4);
    RatMatrix p(n);
    for (int a = 0; a < n; ++a) {
      p.set(a, a, 1);
      for (int b = a + 1; b < n; ++b) {
        Rational prod = 1;
        for (auto e : path_edges(t, t.label_vertex[a], t.label_vertex[b])) prod *= w[e];
        p.set(a, b, prod);
      }
    }
    CHECK(is_lorentzian(p).lorentzian);
    CHECK(in_delta_tp(p, 0).member);
  }
}

TEST_CASE("hyperbolicity") {
  CHECK(hyperbolicity_delta(constant_metric(5, 2)) == 0);
  SplitRng rng(4);
  for (int s = 0; s < 50; ++s)
    CHECK(hyperbolicity_delta(tree_metric(random_tree(6, rng))) == 0);
  // a 4-cycle with unit edges: sums 2, 2 and 4 -> delta 1
  RatMetric c(4, {1, 2, 1, 1, 2, 1});
  CHECK(hyperbolicity_delta(c) == 1);
  CHECK(hyperbolicity_delta(to_real(c)) == 1.0);

  SplitRng root(5);
  for (std::uint64_t s = 0; s < 300; ++s) {
    SplitRng r = root.split(s);
    auto d = normalized_log(sample_rank2(static_cast<int>(r.uniform_int(4, 8)), r));
    CHECK(hyperbolicity_delta(d) <= std::log(2.0) + 1e-12);
  }
}

TEST_CASE("four-point condition") {
  CHECK(four_point_check(constant_metric(4, 2)).holds);
  auto cycle = four_point_check(RatMetric(4, {1, 2, 1, 1, 2, 1}));
  CHECK_FALSE(cycle.holds);
  REQUIRE(cycle.violation);
  CHECK(format_quadruple(*cycle.violation) == "(1,3,2,4)");
  // negative distance and triangle failures are caught through repeated points
  CHECK_FALSE(four_point_check(RatMetric(2, {-1})).holds);
  CHECK_FALSE(four_point_check(RatMetric(3, {1, 1, 5})).holds);

  bool found = false;
  SplitRng root(6);
  for (std::uint64_t s = 0; s < 20 && !found; ++s) {
    SplitRng r = root.split(s);
    found = !four_point_check(log_metric(normalize_diagonal(sample_lorentzian(5, r)))).holds;
  }
  CHECK(found);
}

TEST_CASE("metric closure") {
  RatMetric d(3, {1, 1, 5});
  CHECK_FALSE(is_metric(d));
  auto c = metric_closure(d);
  CHECK(c == RatMetric(3, {1, 1, 2}));
  CHECK(is_metric(c));
}

TEST_CASE("Gromov tree approximation") {
  auto s = constant_metric(5, 2);
  for (int w = 0; w < 5; ++w) CHECK(gromov_tree_approx(s, w).metric == s);

  SplitRng rng(7);
  for (int k = 0; k < 50; ++k) {
    auto d = tree_metric(random_tree(7, rng));
    auto a = gromov_tree_approx(d, static_cast<int>(rng.uniform_int(0, 6)));
    CHECK(a.metric == d);
    CHECK(a.max_gap == 0);
  }

  CHECK_THROWS_AS(gromov_tree_approx(s, 5), Error);
  CHECK_THROWS_AS(gromov_tree_approx(s, -1), Error);

  SplitRng root(8);
  for (std::uint64_t k = 0; k < 300; ++k) {
    SplitRng r = root.split(k);
    int n = static_cast<int>(r.uniform_int(3, 8));
    RatMetric d = to_rational(log_metric(normalize_diagonal(sample_lorentzian(n, r))));
    auto a = gromov_tree_approx(d, static_cast<int>(r.uniform_int(0, n - 1)));
    CHECK(four_point_check(a.metric).holds);
    CHECK(hyperbolicity_delta(a.metric) == 0);
    for (std::size_t i = 0; i < d.d.size(); ++i) CHECK(a.metric.d[i] <= d.d[i]);
    // no tree metric below d can beat the closure gap
    CHECK(a.max_gap >= a.closure_gap);
    if (!a.closure_applied) CHECK(a.closure_gap == 0);
  }
}

TEST_CASE("Gromov approximation on 4 points meets 2 delta ceil(log2 n)") {
  SplitRng root(9);
  for (std::uint64_t k = 0; k < 300; ++k) {
    SplitRng r = root.split(k);
    RatMetric d = to_rational(normalized_log(sample_rank2(4, r)));
    auto a = gromov_tree_approx(d);
    CHECK(a.max_gap <= 2 * Rational(rational_from_double(std::log(2.0))) * 2);
  }
}

TEST_CASE("tree metrics") {
  CHECK(tree_metric(star(3, 1)) == constant_metric(3, 2));
  auto single = tree_metric(split_12_34(1));
  CHECK(single == RatMetric(4, {0, 1, 1, 1, 1, 0}));
  PhyloTree path;
  path.vertex_count = 2;
  path.label_vertex = {0, 1};
  path.edges = {{0, 1, 5}};
  CHECK(tree_metric(path).d == std::vector<Rational>{5});

  PhyloTree bad = star(3, 1);
  bad.edges.pop_back();
  CHECK_THROWS_AS(tree_metric(bad), Error);
  PhyloTree negative = star(3, 1);
  negative.edges[0].len = -1;
  CHECK_THROWS_AS(validate(negative), Error);
}

TEST_CASE("tree reconstruction") {
  auto t = tree_reconstruct(constant_metric(3, 2));
  CHECK(t.edges.size() == 3);
  for (const auto& e : t.edges) CHECK(e.len == 1);
  CHECK(t == canonicalize(star(3, 1)));

  auto s = tree_reconstruct(RatMetric(4, {0, 1, 1, 1, 1, 0}));
  CHECK(s.vertex_count == 2);
  REQUIRE(s.edges.size() == 1);
  CHECK(s.edges[0].len == 1);
  CHECK(s.label_vertex[0] == s.label_vertex[1]);
  CHECK(s.label_vertex[2] == s.label_vertex[3]);

  try {
    tree_reconstruct(RatMetric(4, {1, 2, 1, 1, 2, 1}));
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
    CHECK(e.context() == "(1,3,2,4)");
  }

  SplitRng root(10);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    SplitRng r = root.split(k);
    int n = static_cast<int>(r.uniform_int(1, 9));
    PhyloTree original = random_tree(n, r);
    auto d = tree_metric(original);
    PhyloTree rebuilt = tree_reconstruct(d);
    CHECK(tree_metric(rebuilt) == d);
    CHECK(rebuilt == original);
  }
}

TEST_CASE("canonical form") {
  // star with a zero-length leaf edge: label 1 moves onto the center
  PhyloTree t = star(4, 1);
  t.edges[0].len = 0;
  auto c = canonicalize(t);
  CHECK(c.vertex_count == 4);
  CHECK(c.edges.size() == 3);
  CHECK(tree_metric(c) == tree_metric(t));
  CHECK(canonicalize(c) == c);
}

TEST_CASE("cut decomposition") {
  auto terms = cut_decomposition(split_12_34(1));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].subset == 0b1100u);
  CHECK(terms[0].weight == 1);

  auto st = cut_decomposition(star(3, 1));
  CHECK(st.size() == 3);
  CHECK(cut_sum(3, st) == constant_metric(3, 2));

  PhyloTree z = star(4, 1);
  z.edges[2].len = 0;
  CHECK(cut_decomposition(z).size() == 3);

  SplitRng rng(11);
  for (int k = 0; k < 200; ++k) {
    int n = static_cast<int>(rng.uniform_int(2, 9));
    PhyloTree t = random_tree(n, rng);
    for (int root = 0; root < n; ++root) {
      auto ts = cut_decomposition(t, root);
      for (const auto& term : ts) CHECK(term.weight > 0);
      CHECK(cut_sum(n, ts) == tree_metric(t));
    }
  }
}
