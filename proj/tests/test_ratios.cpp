#include "doctest.h"

#include <vector>

#include "lr/cut_cone.hpp"
#include "lr/error.hpp"
#include "lr/lorentzian.hpp"
#include "lr/parallel.hpp"
#include "lr/ratios.hpp"

using namespace lr;

namespace {

using Q = std::vector<Rational>;

ReducedRatio reduced(int n, std::vector<long> v) { return ReducedRatio{n, Q(v.begin(), v.end())}; }

FullRatio triangular(int i, int j, int k, int n) {
  return named_ratio(RatioKind::Triangular, {i - 1, j - 1, k - 1}, n);
}

FullRatio pentagonal(std::vector<int> idx, int n) {
  for (auto& i : idx) --i;
  return named_ratio(RatioKind::Pentagonal, idx, n);
}

FullRatio af(int i, int j, int n) { return named_ratio(RatioKind::AlexandrovFenchel, {i - 1, j - 1}, n); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Usage;
}

Subset mask(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int e : one_based) s |= Subset{1} << (e - 1);
  return s;
}

}  // namespace

TEST_CASE("diagonal completion") {
  auto a = complete_diagonal(reduced(2, {-2}));
  CHECK(a.diag == Q{1, 1});
  CHECK(a == af(1, 2, 2));

  // pairs 12 13 23
  auto t = complete_diagonal(reduced(3, {-1, -1, 1}));
  CHECK(t.diag == Q{1, 0, 0});
  CHECK(reduce(t) == reduced(3, {-1, -1, 1}));

  auto z = complete_diagonal(reduced(4, {0, 0, 0, 0, 0, 0}));
  CHECK(z.diag == Q{0, 0, 0, 0});
  CHECK(is_balanced(z));
}

TEST_CASE("named ratios") {
  auto t = triangular(1, 2, 3, 3);
  CHECK(t.offdiag == Q{1, -1, -1});
  CHECK(t.diag == Q{0, 0, 1});

  auto p = pentagonal({1, 2, 3, 4, 5}, 5);
  CHECK(reduce(p) == reduced_from_ints(5, hypermetric_ratio({1, 1, 1, -1, -1})));
  CHECK(p.diag == Q{0, 0, 0, 1, 1});

  CHECK(pentagonal({1, 2, 3, 3, 3}, 3) == triangular(1, 2, 3, 3));

  CHECK(code_of([] { named_ratio(RatioKind::Triangular, {0, 1}, 3); }) == ErrorCode::Domain);
  CHECK(code_of([] { named_ratio(RatioKind::Triangular, {0, 1, 3}, 3); }) == ErrorCode::Domain);
  CHECK(code_of([] { af(1, 1, 2); }) == ErrorCode::Domain);
}

TEST_CASE("degeneration identities on n = 5") {
  const int n = 5;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        bool tri_zero = false;
        FullRatio tri;
        try {
          tri = triangular(i, j, k, n);
        } catch (const Error&) {
          tri_zero = true;
        }
        bool pent_zero = false;
        FullRatio pent;
        try {
          pent = pentagonal({i, j, k, k, k}, n);
        } catch (const Error&) {
          pent_zero = true;
        }
        CHECK(tri_zero == pent_zero);
        if (!tri_zero) CHECK(tri == pent);
        if (i != k) {
          CHECK(triangular(i, i, k, n) == af(i, k, n));
        }
      }
}

TEST_CASE("exact evaluation") {
  CHECK(evaluate(pentagonal({1, 2, 3, 4, 5}, 5), witness_pentagonal(1)).value == Rational(32, 9));
  RatMatrix ones(std::vector<Q>{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(evaluate(triangular(1, 2, 3, 3), ones).value == 1);
  RatMatrix m(std::vector<Q>{{1, 2}, {2, 1}});
  CHECK(evaluate(af(1, 2, 2), m).value == Rational(1, 4));
  CHECK(evaluate(af(1, 2, 2), to_real(m)).value == doctest::Approx(0.25));

  // 0^0 on the first diagonal entry of the pentagonal witness
  auto r = evaluate(triangular(1, 2, 3, 3), RatMatrix(std::vector<Q>{{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}));
  CHECK(r.zero_pow_zero);
  CHECK(r.value == 1);

  RatMatrix zero_off(std::vector<Q>{{1, 0}, {0, 1}});
  CHECK(code_of([&] { evaluate(af(1, 2, 2), zero_off); }) == ErrorCode::Domain);
  CHECK(code_of([&] { evaluate(scaled(af(1, 2, 2), Rational(1, 2)), m); }) == ErrorCode::Domain);
  CHECK(evaluate(scaled(af(1, 2, 2), Rational(1, 2)), to_real(m)).value == doctest::Approx(0.5));
}

TEST_CASE("exact comparison with rational exponents") {
  auto half = scaled(pentagonal({1, 2, 3, 4, 5}, 5), Rational(1, 2));
  auto w = witness_pentagonal(1);  // pentagonal value 32/9, square root ~1.886
  CHECK(value_at_most(half, w, Rational(19, 10)));
  CHECK_FALSE(value_at_most(half, w, Rational(47, 25)));
  CHECK(value_at_most(pentagonal({1, 2, 3, 4, 5}, 5), w, Rational(32, 9)));
  CHECK_FALSE(value_at_most(pentagonal({1, 2, 3, 4, 5}, 5), w, Rational(7, 2)));
}

TEST_CASE("scaling invariance") {
  SplitRng root(31337);
  for (std::uint64_t t = 0; t < 1000; ++t) {
    SplitRng rng = root.split(t);
    int n = static_cast<int>(rng.uniform_int(2, 6));
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, make_rational(rng.uniform_int(1, 50), rng.uniform_int(1, 50)));
    std::vector<Rational> c(n);
    for (auto& x : c) x = make_rational(rng.uniform_int(1, 20), rng.uniform_int(1, 20));
    ReducedRatio r{n, Q(pair_count(n))};
    for (auto& x : r.coords) x = rng.uniform_int(-3, 3);
    auto full = complete_diagonal(r);
    if (!has_integral_exponents(full)) full = scaled(full, 2);
    CHECK(evaluate(full, scale(m, c)).value == evaluate(full, m).value);
  }
}

TEST_CASE("facets of Cut_5 are bounded by 4 on rank-2 samples") {
  auto facets = enumerate_facets(5);
  std::vector<FullRatio> full;
  for (const auto& f : facets) full.push_back(complete_diagonal(to_ratio(f)));
  const std::size_t samples = 10000;
  std::vector<int> bad(samples, 0);
  SplitRng root(5);
  parallel_for(samples, default_threads(), [&](std::size_t s) {
    SplitRng rng = root.split(s);
    auto m = sample_rank2(5, rng);
    for (const auto& r : full)
      if (!(evaluate(r, m).value <= 4)) ++bad[s];
  });
  int total = 0;
  for (int b : bad) total += b;
  CHECK(total == 0);
}

TEST_CASE("boundedness certificates") {
  auto c = is_bounded(reduced(3, {-1, -1, 1}));
  CHECK(c.bounded);
  CHECK_FALSE(c.violating_subset);
  CHECK(c.tight_subsets == std::vector<Subset>{mask({2}), mask({3})});
  CHECK(cut_dot(3, Q{-1, -1, 1}, mask({2, 3})) == -2);

  auto u = is_bounded(reduced(3, {1, 0, 0}));
  CHECK_FALSE(u.bounded);
  REQUIRE(u.violating_subset);
  CHECK(*u.violating_subset == mask({2}));
  CHECK(u.violation == 1);

  CHECK(is_bounded(reduce(pentagonal({1, 2, 3, 4, 5}, 5))).bounded);

  SplitRng root(77);
  for (std::uint64_t t = 0; t < 500; ++t) {
    SplitRng rng = root.split(t);
    int n = static_cast<int>(rng.uniform_int(2, 7));
    ReducedRatio r{n, Q(pair_count(n))};
    for (auto& x : r.coords) x = make_rational(rng.uniform_int(-4, 2), rng.uniform_int(1, 3));
    auto cert = is_bounded(r);
    CHECK(cert.bounded != cert.violating_subset.has_value());
    if (cert.violating_subset) CHECK(cut_dot(n, r.coords, *cert.violating_subset) > 0);
  }
}

TEST_CASE("facets are tight on a hyperplane") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : enumerate_facets(n)) {
      auto cert = is_bounded(to_ratio(f));
      CHECK(cert.bounded);
      CHECK(tight_rank(n, cert.tight_subsets) == static_cast<int>(pair_count(n)) - 1);
    }
}

TEST_CASE("normalization") {
  auto t = reduce(triangular(1, 2, 3, 3));
  CHECK(normalize_ratio(t) == t);
  auto p = reduce(pentagonal({1, 2, 3, 4, 5}, 5));
  CHECK(normalize_ratio(p) == scaled(p, Rational(1, 2)));
  CHECK(normalize_ratio(scaled(t, 5)) == t);
  CHECK(code_of([] { normalize_ratio(reduced(3, {0, 0, 0})); }) == ErrorCode::Domain);
  CHECK(code_of([] { normalize_ratio(reduced(3, {1, 0, 0})); }) == ErrorCode::Domain);
}

TEST_CASE("decomposition into facets") {
  auto basis = enumerate_facets(3);
  // basis order: 23|1, 13|2, 12|3
  auto d12 = decompose(af(1, 2, 3), basis);
  REQUIRE(d12);
  CHECK(*d12 == Decomposition{{0, 1}, {1, 1}});
  auto d13 = decompose(af(1, 3, 3), basis);
  REQUIRE(d13);
  CHECK(*d13 == Decomposition{{0, 1}, {2, 1}});
  auto self = decompose(triangular(1, 2, 3, 3), basis);
  REQUIRE(self);
  CHECK(*self == Decomposition{{2, 1}});

  CHECK(code_of([&] { decompose(complete_diagonal(reduced(3, {1, 0, 0})), basis); }) ==
        ErrorCode::Domain);

  // Sums of random facets of Cut_5 decompose and re-sum exactly.
  auto b5 = enumerate_facets(5);
  SplitRng rng(99);
  for (int t = 0; t < 30; ++t) {
    IntVector target(pair_count(5), 0);
    int terms = static_cast<int>(rng.uniform_int(1, 3));
    for (int k = 0; k < terms; ++k) {
      auto& f = b5[rng.uniform_int(0, static_cast<std::int64_t>(b5.size()) - 1)];
      for (std::size_t i = 0; i < target.size(); ++i) target[i] += f.coords[i];
    }
    auto d = decompose(complete_diagonal(reduced_from_ints(5, target)), b5);
    REQUIRE(d);
    IntVector sum(pair_count(5), 0);
    for (auto [idx, coef] : *d) {
      CHECK(coef > 0);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += coef * b5[idx].coords[i];
    }
    CHECK(sum == target);
  }
}
