#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lr/rational.hpp"

namespace lr {

/// Polynomial with integer coefficients in a_1..a_n, b_1..b_n. Exponent
/// vectors have length 2n (a's first) and are stored packed, one byte per
/// variable. Zero coefficients are never stored.
class IntPoly {
 public:
  using Exponents = std::vector<int>;
  using Term = std::pair<Exponents, BigInt>;

  IntPoly() = default;
  explicit IntPoly(int n);
  static IntPoly constant(int n, const BigInt& c);

  int n() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial; Domain error for a malformed exponent vector and
  /// Capability error past exponent 255.
  void add_term(const Exponents& exps, const BigInt& c);
  BigInt coefficient(const Exponents& exps) const;

  /// Terms in graded-lex order: higher total degree first, ties broken by
  /// larger exponent of a_1, then a_2, ..., b_n.
  std::vector<Term> terms() const;

  Rational evaluate(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  bool operator==(const IntPoly& other) const { return n_ == other.n_ && terms_ == other.terms_; }

  friend IntPoly poly_add(const IntPoly& p, const IntPoly& q);
  friend IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
  friend IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
  friend IntPoly poly_scale(const IntPoly& p, const BigInt& k);

 private:
  using Key = std::string;  // 2n bytes
  Key pack(const Exponents& exps) const;
  Exponents unpack(const Key& key) const;
  void accumulate(const Key& key, const BigInt& c);

  int n_ = 0;
  std::unordered_map<Key, BigInt> terms_;
};

/// a_i b_j + a_j b_i (2 a_i b_i on the diagonal); 0-based indices.
IntPoly poly_from_entry(int i, int j, int n);

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_scale(const IntPoly& p, const BigInt& k);
IntPoly poly_pow(const IntPoly& p, unsigned k);

std::string format_monomial(const IntPoly::Exponents& exps);

/// "2*a1^2*b2*b3 + 2*a2*a3*b1^2"; "0" for the zero polynomial.
std::string to_string(const IntPoly& p);

}  // namespace lr
