#include "doctest.h"

#include "lr/error.hpp"
#include "lr/pairs.hpp"
#include "lr/rational.hpp"
#include "lr/random.hpp"

using namespace lr;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("+3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(5)) == "5/1");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("exact doubles and powers") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(0.1).get_d() == 0.1);
  CHECK_THROWS_AS(rational_from_double(1.0 / 0.0), Error);
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_int(Rational(0), 0) == 1);
  CHECK_THROWS_AS(pow_int(Rational(0), -1), Error);
}

TEST_CASE("pair indexing") {
  const int n = 6;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      CHECK(pair_index(n, i, j) == k);
      CHECK(pair_index(n, j, i) == k);
      CHECK(pair_at(n, k) == std::pair<int, int>{i, j});
    }
  CHECK(pairs_of(n).size() == pair_count(n));
  CHECK(pair_key(0, 2) == "1,3");
  CHECK(parse_pair_key("3,1", 4) == std::pair<int, int>{0, 2});
  CHECK_THROWS_AS(parse_pair_key("1,1", 4), Error);
  CHECK_THROWS_AS(parse_pair_key("1,5", 4), Error);
  CHECK_THROWS_AS(parse_pair_key("x", 4), Error);
  CHECK(format_subset(0b101) == "{1,3}");
  CHECK(complement_normalized(3, 0b001) == 0b110);
}

TEST_CASE("split generator is deterministic and stream-independent") {
  SplitRng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
  SplitRng c1 = SplitRng(42).split(1), c2 = SplitRng(42).split(2);
  CHECK(c1.next_u64() != c2.next_u64());
  SplitRng u(9);
  for (int i = 0; i < 1000; ++i) {
    double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    auto k = u.uniform_int(-2, 2);
    CHECK(k >= -2);
    CHECK(k <= 2);
  }
}
