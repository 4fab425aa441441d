#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "lr/constants.hpp"
#include "lr/error.hpp"
#include "lr/lorentzian.hpp"
#include "lr/ratios.hpp"

using namespace lr;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Usage;
}

Rational q(long a, long b = 1) { return make_rational(a, b); }

// log2 of the constant on Delta_3(T_p) as a 3-variable LP in q = log2 p:
// maximize l(q) over the polyhedron cut out by the 3x3 T_p triangle
// conditions and p_ij^2 <= 2^p p_ii p_jj with unit diagonal. Vertex
// enumeration over all triples of the six constraints.
double lp_oracle(double a, double b, double c, double p) {
  // rows: coefficients on (q12, q13, q23) and rhs, row . q <= rhs
  const double A[6][4] = {
      {-1, -1, 1, p}, {-1, 1, -1, p}, {1, -1, -1, p},
      {-2, 0, 0, p},  {0, -2, 0, p},  {0, 0, -2, p},
  };
  const double w[3] = {-a - b + c, -a + b - c, a - b - c};
  double best = -INFINITY;
  for (int r0 = 0; r0 < 6; ++r0)
    for (int r1 = r0 + 1; r1 < 6; ++r1)
      for (int r2 = r1 + 1; r2 < 6; ++r2) {
        const int rows[3] = {r0, r1, r2};
        double m[3][4];
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 4; ++j) m[i][j] = A[rows[i]][j];
        // Gaussian elimination with partial pivoting
        bool singular = false;
        for (int col = 0; col < 3 && !singular; ++col) {
          int piv = col;
          for (int i = col + 1; i < 3; ++i)
            if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
          if (std::abs(m[piv][col]) < 1e-12) {
            singular = true;
            break;
          }
          std::swap(m[piv], m[col]);
          for (int i = 0; i < 3; ++i) {
            if (i == col) continue;
            double f = m[i][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[i][j] -= f * m[col][j];
          }
        }
        if (singular) continue;
        double x[3];
        for (int i = 0; i < 3; ++i) x[i] = m[i][3] / m[i][i];
        bool feasible = true;
        for (const auto& row : A)
          if (row[0] * x[0] + row[1] * x[1] + row[2] * x[2] > row[3] + 1e-9) feasible = false;
        if (!feasible) continue;
        best = std::max(best, w[0] * x[0] + w[1] * x[1] + w[2] * x[2]);
      }
  return best;
}

BarycentricRatio random_bary(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  double a = e(rng), b = e(rng), c = e(rng);
  double s = a + b + c;
  a /= s;
  b /= s;
  return {a, b, 1 - a - b};
}

}  // namespace

TEST_CASE("closed-form constant at special points") {
  CHECK(theorem_c({1, 0, 0}) == doctest::Approx(2).epsilon(1e-12));
  CHECK(theorem_c({0, 1, 0}) == doctest::Approx(2).epsilon(1e-12));
  CHECK(theorem_c({0, 0, 1}) == doctest::Approx(2).epsilon(1e-12));
  CHECK(theorem_c({1.0 / 3, 1.0 / 3, 1.0 / 3}) == 1.0);
  // midpoints of the edges lie on the inscribed circle
  CHECK(theorem_c({0.5, 0.5, 0}) == 1.0);
  CHECK(theorem_c({0, 0.5, 0.5}) == 1.0);
  CHECK(theorem_c({0.5, 0, 0.5}) == 1.0);
}

TEST_CASE("closed form against the numerical maximum") {
  // frozen after agreeing with verify_n3 to 1e-9
  const double frozen = 1.11032151746146;
  auto num = verify_n3({0.8, 0.1, 0.1});
  CHECK(num.value == doctest::Approx(frozen).epsilon(1e-9));
  CHECK(theorem_c({0.8, 0.1, 0.1}) == doctest::Approx(frozen).epsilon(1e-12));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto bq = random_bary(rng);
    double f = theorem_c(bq);
    auto m = verify_n3(bq, 201, 1);
    INFO(bq.a << " " << bq.b << " " << bq.c);
    CHECK(std::abs(f - m.value) <= 1e-6 * std::max(1.0, f));
    CHECK(f >= 1.0);
    CHECK(f <= 2.0 + 1e-12);
  }
}

TEST_CASE("closed form near the circle and on the edges of the simplex") {
  // points on the circle: (2a-1)^2 = 4bc with b = c
  for (double a : {0.6, 0.75, 0.9}) {
    double b = (1 - a) / 2;
    BarycentricRatio on{a, b, b};
    double disc = circle_discriminant(on);
    if (std::abs(disc) <= 1e-12) CHECK(theorem_c(on) == 1.0);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    double a = u(rng);
    BarycentricRatio edge{a, 1 - a, 0};
    CHECK(theorem_c(edge) == doctest::Approx(verify_n3(edge, 201, 1).value).epsilon(1e-6));
  }
}

TEST_CASE("closed form is permutation invariant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto bq = random_bary(rng);
    double base = theorem_c(bq);
    std::array<double, 3> v{bq.a, bq.b, bq.c};
    std::sort(v.begin(), v.end());
    do {
      CHECK(theorem_c({v[0], v[1], v[2]}) == doctest::Approx(base).epsilon(1e-12));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("barycentric validation") {
  CHECK(code_of([] { theorem_c({0.5, 0.6, -0.1}); }) == ErrorCode::Domain);
  CHECK(code_of([] { theorem_c({0.5, 0.5, 0.1}); }) == ErrorCode::Domain);
  CHECK(code_of([] { theorem_c({NAN, 0.5, 0.5}); }) == ErrorCode::Domain);
  CHECK(code_of([] { verify_n3({1, 0, 0}, 1); }) == ErrorCode::Domain);
}

TEST_CASE("fp_delta3 matches the LP oracle") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    double a = u(rng), b = u(rng), c = u(rng), p = u(rng);
    if (trial % 4 == 0) a = b + c + u(rng);  // force the first branch regularly
    double expected = std::exp2(lp_oracle(a, b, c, p));
    INFO(a << " " << b << " " << c << " " << p);
    CHECK(fp_delta3(a, b, c, p) == doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(fp_delta3(1, 0, 0, 2) == 4.0);
  CHECK(fp_delta3(1, 1, 1, 2) == 8.0);
  CHECK(fp_delta3(1, 1, 1, 0) == 1.0);
  CHECK(code_of([] { fp_delta3(-1, 0, 0, 1); }) == ErrorCode::Domain);
  CHECK(code_of([] { fp_delta3(1, 0, 0, -1); }) == ErrorCode::Domain);
}

TEST_CASE("six-variable inequality examples") {
  auto r = hard_lemma_check({q(1), q(1), q(1)}, {q(1), q(1), q(1)});
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(r.lhs == 27);
  CHECK(r.rhs == 32);

  auto neg = hard_lemma_check({q(6), q(1), q(1)}, {q(1), q(1), q(6)});
  CHECK(neg.quantities.X == -12);
  CHECK(neg.quantities.Y == -12);
  CHECK_FALSE(neg.applicable);
  CHECK(neg.holds);

  auto t = hard_lemma_check({q(1), q(1), q(2)}, {q(1), q(1), q(2)});
  CHECK(t.quantities.X == 4);
  CHECK(t.quantities.Y == 4);
  CHECK(t.quantities.Z == 4);
  CHECK(t.lhs == 64);
  CHECK(t.rhs == 128);
  CHECK(t.holds);

  CHECK(code_of([] { hard_lemma_check({q(0), q(1), q(1)}, {q(1), q(1), q(1)}); }) == ErrorCode::Domain);
}

TEST_CASE("six-variable inequality on random rationals") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> u(1, 40);
  int applicable = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::array<Rational, 3> x, y;
    for (auto& v : x) v = q(u(rng), u(rng));
    for (auto& v : y) v = q(u(rng), u(rng));
    auto r = hard_lemma_check(x, y);
    applicable += r.applicable;
    CHECK(r.holds);
  }
  CHECK(applicable > 0);
}

TEST_CASE("triangular witness family") {
  auto tri = named_ratio(RatioKind::Triangular, {0, 1, 2}, 3);
  for (long k = 2; k <= 10000; k *= 10) {
    Rational eps = q(1, k);
    auto w = witness_triangular(eps);
    auto rep = is_lorentzian(w);
    CHECK(rep.lorentzian);
    CHECK(rep.signature == EigenSignature{1, 1, 1});
    CHECK(evaluate(tri, w).value == 2 / (1 + eps));
  }
  CHECK(code_of([] { witness_triangular(q(0)); }) == ErrorCode::Domain);
  CHECK(code_of([] { witness_triangular(q(1)); }) == ErrorCode::Domain);
}

TEST_CASE("relabel and match") {
  auto pent = reduce(named_ratio(RatioKind::Pentagonal, {0, 1, 2, 3, 4}, 5));
  auto moved = reduce(named_ratio(RatioKind::Pentagonal, {4, 2, 0, 1, 3}, 5));
  auto doubled = scaled(moved, q(3, 2));
  auto m = match_relabelled(doubled, pent);
  REQUIRE(m.has_value());
  CHECK(m->factor == q(3, 2));

  auto full = complete_diagonal(doubled);
  auto base = named_ratio(RatioKind::Pentagonal, {0, 1, 2, 3, 4}, 5);
  auto w = witness_pentagonal(q(1, 3));
  // moved ratio on the relabelled witness equals the base value to the factor
  double lhs = evaluate(full, to_real(relabel(w, m->sigma))).value;
  double rhs = std::pow(evaluate(base, w).value.get_d(), 1.5);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  CHECK_FALSE(match_relabelled(scaled(pent, q(-1)), pent).has_value());
  auto tri = reduce(named_ratio(RatioKind::Triangular, {0, 1, 2}, 5));
  CHECK_FALSE(match_relabelled(tri, pent).has_value());
}

TEST_CASE("estimate_sup") {
  auto pent = named_ratio(RatioKind::Pentagonal, {0, 1, 2, 3, 4}, 5);
  auto est = estimate_sup(pent, 100000, 9);
  REQUIRE(est.exact.has_value());
  CHECK(*est.exact <= 4);
  CHECK(est.value >= 3.9999);
  CHECK(est.source == "pentagonal witness t=1e-4");

  auto tri = named_ratio(RatioKind::Triangular, {2, 0, 1}, 3);
  auto t = estimate_sup(tri, 100000, 9);
  CHECK(t.value <= 2);
  CHECK(t.value >= 1.9998);

  // plain sampling only; deterministic in the seed and thread count
  auto af = named_ratio(RatioKind::AlexandrovFenchel, {0, 1}, 4);
  auto a1 = estimate_sup(af, 300, 4, {}, 1);
  auto a4 = estimate_sup(af, 300, 4, {}, 4);
  CHECK(a1.value == a4.value);
  CHECK(a1.source == a4.source);
  CHECK(a1.value <= 1);

  ReducedRatio unbounded{3, {Rational(1), Rational(0), Rational(0)}};
  CHECK(code_of([&] { estimate_sup(complete_diagonal(unbounded), 10, 1); }) == ErrorCode::Domain);
}
