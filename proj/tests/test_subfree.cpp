#include "doctest.h"

#include <random>
#include <vector>

#include "lr/cut_cone.hpp"
#include "lr/error.hpp"
#include "lr/lorentzian.hpp"
#include "lr/poly.hpp"
#include "lr/ratios.hpp"
#include "lr/subfree.hpp"

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

// exponent vector from (a-exponents, b-exponents)
IntPoly::Exponents ex(std::vector<int> a, std::vector<int> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

IntPoly random_poly(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 2), c(-5, 5), count(0, 4);
  IntPoly p(n);
  int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    IntPoly::Exponents exps(2 * n);
    for (auto& x : exps) x = e(rng);
    p.add_term(exps, c(rng));
  }
  return p;
}

Rational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(1, 30);
  return make_rational(u(rng), u(rng));
}

// 2^s prod p^{-alpha-} - prod p^{alpha+} straight from the Hessian entries.
Rational direct_difference(const FullRatio& r, const RatMatrix& p) {
  Rational neg = 1, pos = 1;
  long s = 0;
  auto take = [&](int i, int j, const Rational& a) {
    long e = a.get_num().get_si();
    if (e > 0) pos *= pow_int(p(i, j), e);
    if (e < 0) neg *= pow_int(p(i, j), -e);
  };
  for (int i = 0; i < r.n; ++i) {
    take(i, i, r.diag[i]);
    s += r.diag[i].get_num().get_si();
  }
  for (int i = 0; i < r.n; ++i)
    for (int j = i + 1; j < r.n; ++j) take(i, j, r.offdiag[pair_index(r.n, i, j)]);
  Rational two = pow_int(Rational(2), s < 0 ? -s : s);
  if (s >= 0) return two * neg - pos;
  return neg - two * pos;
}

}  // namespace

TEST_CASE("entry polynomials") {
  auto p12 = poly_from_entry(0, 1, 3);
  CHECK(to_string(p12) == "a1*b2 + a2*b1");
  auto p11 = poly_from_entry(0, 0, 3);
  CHECK(to_string(p11) == "2*a1*b1");
  CHECK(p11.term_count() == 1);

  auto prod = poly_mul(poly_from_entry(1, 2, 3), p11);
  CHECK(prod.term_count() == 2);
  CHECK(prod.coefficient(ex({1, 1, 0}, {1, 0, 1})) == 2);
  CHECK(prod.coefficient(ex({1, 0, 1}, {1, 1, 0})) == 2);

  auto sq = poly_mul(p12, p12);
  CHECK(to_string(sq) == "a1^2*b2^2 + 2*a1*a2*b1*b2 + a2^2*b1^2");
  CHECK(poly_pow(p12, 2) == sq);

  CHECK(code_of([] { poly_from_entry(3, 0, 3); }) == ErrorCode::Domain);
  CHECK(code_of([] { poly_from_entry(-1, 0, 3); }) == ErrorCode::Domain);
}

TEST_CASE("identities and universe checks") {
  auto p = poly_from_entry(0, 1, 3);
  CHECK(poly_mul(p, IntPoly::constant(3, 1)) == p);
  CHECK(poly_sub(p, p).is_zero());
  CHECK(to_string(poly_sub(p, p)) == "0");
  CHECK(poly_scale(p, 0).is_zero());
  CHECK(to_string(poly_scale(p, -3)) == "-3*a1*b2 - 3*a2*b1");
  CHECK(code_of([&] { poly_mul(p, poly_from_entry(0, 1, 4)); }) == ErrorCode::Structural);
  CHECK(code_of([&] { poly_sub(p, poly_from_entry(0, 1, 4)); }) == ErrorCode::Structural);
  IntPoly q(2);
  CHECK(code_of([&] { q.add_term({1, 0, 0}, 1); }) == ErrorCode::Domain);
  CHECK(code_of([&] { q.add_term({1, 0, -1, 0}, 1); }) == ErrorCode::Domain);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_poly(3, rng), b = random_poly(3, rng), c = random_poly(3, rng);
    CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
    CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_sub(poly_add(a, b), b) == a);
  }
}

TEST_CASE("graded-lex serialization is deterministic") {
  std::mt19937_64 rng(2);
  auto p = random_poly(3, rng);
  p = poly_mul(p, poly_from_entry(0, 2, 3));
  auto terms = p.terms();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    int d0 = 0, d1 = 0;
    for (int e : terms[k - 1].first) d0 += e;
    for (int e : terms[k].first) d1 += e;
    CHECK((d0 > d1 || (d0 == d1 && terms[k - 1].first > terms[k].first)));
  }
}

TEST_CASE("triangular difference") {
  // 23|1 on three points
  auto tri = named_ratio(RatioKind::Triangular, {1, 2, 0}, 3);
  auto rep = subfree_check(tri);
  CHECK(rep.holds);
  CHECK(rep.diagonal_sum == 1);
  CHECK_FALSE(rep.rearranged);
  IntPoly expected(3);
  expected.add_term(ex({2, 0, 0}, {0, 1, 1}), 2);
  expected.add_term(ex({0, 1, 1}, {2, 0, 0}), 2);
  CHECK(rep.difference == expected);
  CHECK(rep.term_count == 2);
}

TEST_CASE("zero ratio and error paths") {
  FullRatio zero{4, std::vector<Rational>(6), std::vector<Rational>(4)};
  auto rep = subfree_check(zero);
  CHECK(rep.holds);
  CHECK(rep.difference.is_zero());

  auto half = scaled(named_ratio(RatioKind::Triangular, {0, 1, 2}, 3), make_rational(1, 2));
  CHECK(code_of([&] { subfree_check(half); }) == ErrorCode::Domain);
  ReducedRatio unbounded{3, {Rational(1), Rational(0), Rational(0)}};
  CHECK(code_of([&] { subfree_check(complete_diagonal(unbounded)); }) == ErrorCode::Domain);
}

TEST_CASE("pentagonal ratio is subtraction-free") {
  auto rep = subfree_check(named_ratio(RatioKind::Pentagonal, {0, 1, 2, 3, 4}, 5));
  CHECK(rep.holds);
  CHECK(rep.term_count > 0);
}

TEST_CASE("every facet up to n = 5 and the n = 6 orbit representatives") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<FullRatio> ratios;
    for (const auto& f : enumerate_facets(n)) ratios.push_back(complete_diagonal(to_ratio(f)));
    auto reports = subfree_check_all(ratios, 4);
    for (std::size_t k = 0; k < reports.size(); ++k) {
      INFO("n=" << n << " facet " << k);
      CHECK(reports[k].holds);
    }
  }
  auto orbits = orbit_classify(6, enumerate_facets(6));
  REQUIRE(orbits.orbits.size() == 4);
  for (const auto& o : orbits.orbits) {
    auto rep = subfree_check(complete_diagonal(to_ratio(o.representative)));
    CHECK(rep.holds);
  }
}

TEST_CASE("expanded difference agrees with direct evaluation") {
  std::mt19937_64 rng(8);
  std::vector<FullRatio> ratios;
  for (const auto& f : enumerate_facets(5)) ratios.push_back(complete_diagonal(to_ratio(f)));
  ratios.push_back(named_ratio(RatioKind::AlexandrovFenchel, {0, 3}, 5));
  for (const auto& r : ratios) {
    auto rep = subfree_check(r);
    for (int trial = 0; trial < 100; ++trial) {
      Rank2Params<Rational> params;
      for (int i = 0; i < r.n; ++i) {
        params.a.push_back(random_positive(rng));
        params.b.push_back(random_positive(rng));
      }
      Rational poly_value = rep.difference.evaluate(params.a, params.b);
      CHECK(poly_value == direct_difference(r, rank2_hessian(params)));
      if (rep.holds) CHECK(poly_value >= 0);
    }
  }
}

TEST_CASE("bounded ratios never need the rearrangement") {
  // summing alpha . delta(S) <= 0 over all cuts gives sum_{i<j} alpha_ij <= 0,
  // and the completed diagonal sums to minus that
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : enumerate_facets(n)) {
      auto rep = subfree_check(complete_diagonal(to_ratio(f)));
      CHECK(rep.diagonal_sum >= 0);
      CHECK_FALSE(rep.rearranged);
    }
  auto af = named_ratio(RatioKind::AlexandrovFenchel, {0, 1}, 3);
  CHECK(subfree_check(af).diagonal_sum == 2);
}
