#include "lr/rational.hpp"

#include <cmath>

#include "lr/error.hpp"

namespace lr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Structural: return "structural";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Capability: return "capability";
    case ErrorCode::ResourceLimit: return "resource_limit";
    case ErrorCode::InvariantViolation: return "invariant_violation";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    fail(ErrorCode::Domain, "malformed rational", std::string(text));
  }
  std::string num_s(num[0] == '+' ? num.substr(1) : num);
  BigInt p(num_s, 10);
  BigInt q(std::string(den), 10);
  if (q == 0) fail(ErrorCode::Domain, "zero denominator", std::string(text));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational rational_from_double(double value) {
  require(std::isfinite(value), ErrorCode::Domain, "non-finite value");
  return Rational(value);
}

Rational pow_int(const Rational& value, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0 && value == 0) {
    fail(ErrorCode::Domain, "zero raised to a negative power");
  }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace lr
