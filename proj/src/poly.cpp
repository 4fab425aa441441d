#include "lr/poly.hpp"

#include <algorithm>
#include <numeric>

#include "lr/error.hpp"

namespace lr {

namespace {

void same_universe(const IntPoly& p, const IntPoly& q) {
  require(p.n() == q.n(), ErrorCode::Structural, "polynomials live in different variable sets",
          std::to_string(p.n()) + " vs " + std::to_string(q.n()));
}

}  // namespace

IntPoly::IntPoly(int n) : n_(n) {
  require(n >= 1 && n <= 64, ErrorCode::Domain, "polynomial needs 1 <= n <= 64");
}

IntPoly IntPoly::constant(int n, const BigInt& c) {
  IntPoly p(n);
  p.add_term(Exponents(2 * n, 0), c);
  return p;
}

IntPoly::Key IntPoly::pack(const Exponents& exps) const {
  require(exps.size() == static_cast<std::size_t>(2 * n_), ErrorCode::Domain,
          "exponent vector must have length 2n");
  Key key(exps.size(), '\0');
  for (std::size_t k = 0; k < exps.size(); ++k) {
    require(exps[k] >= 0, ErrorCode::Domain, "exponents must be nonnegative");
    require(exps[k] <= 255, ErrorCode::Capability, "exponent exceeds 255");
    key[k] = static_cast<char>(static_cast<unsigned char>(exps[k]));
  }
  return key;
}

IntPoly::Exponents IntPoly::unpack(const Key& key) const {
  Exponents exps(key.size());
  for (std::size_t k = 0; k < key.size(); ++k) exps[k] = static_cast<unsigned char>(key[k]);
  return exps;
}

void IntPoly::accumulate(const Key& key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void IntPoly::add_term(const Exponents& exps, const BigInt& c) { accumulate(pack(exps), c); }

BigInt IntPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(pack(exps));
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<IntPoly::Term> IntPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(unpack(key), c);
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  return out;
}

Rational IntPoly::evaluate(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  require(a.size() == static_cast<std::size_t>(n_) && b.size() == a.size(), ErrorCode::Structural,
          "evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& [key, c] : terms_) {
    Rational term(c);
    for (int k = 0; k < 2 * n_; ++k) {
      int e = static_cast<unsigned char>(key[k]);
      if (e == 0) continue;
      const Rational& base = k < n_ ? a[k] : b[k - n_];
      term *= pow_int(base, e);
    }
    sum += term;
  }
  return sum;
}

IntPoly poly_add(const IntPoly& p, const IntPoly& q) {
  same_universe(p, q);
  IntPoly out = p;
  for (const auto& [key, c] : q.terms_) out.accumulate(key, c);
  return out;
}

IntPoly poly_sub(const IntPoly& p, const IntPoly& q) {
  same_universe(p, q);
  IntPoly out = p;
  for (const auto& [key, c] : q.terms_) out.accumulate(key, -c);
  return out;
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  same_universe(p, q);
  IntPoly out(p.n_);
  IntPoly::Key key(2 * p.n_, '\0');
  for (const auto& [kp, cp] : p.terms_)
    for (const auto& [kq, cq] : q.terms_) {
      for (std::size_t k = 0; k < key.size(); ++k) {
        int e = static_cast<unsigned char>(kp[k]) + static_cast<unsigned char>(kq[k]);
        require(e <= 255, ErrorCode::Capability, "exponent exceeds 255");
        key[k] = static_cast<char>(static_cast<unsigned char>(e));
      }
      out.accumulate(key, cp * cq);
    }
  return out;
}

IntPoly poly_scale(const IntPoly& p, const BigInt& k) {
  IntPoly out(p.n_);
  if (k == 0) return out;
  out.terms_ = p.terms_;
  for (auto& [key, c] : out.terms_) c *= k;
  return out;
}

IntPoly poly_pow(const IntPoly& p, unsigned k) {
  IntPoly out = IntPoly::constant(p.n(), 1);
  IntPoly base = p;
  while (k > 0) {
    if (k & 1u) out = poly_mul(out, base);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base);
  }
  return out;
}

IntPoly poly_from_entry(int i, int j, int n) {
  require(i >= 0 && i < n && j >= 0 && j < n, ErrorCode::Domain, "entry index out of range",
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  IntPoly p(n);
  IntPoly::Exponents e(2 * n, 0);
  e[i] += 1;
  e[n + j] += 1;
  p.add_term(e, 1);
  IntPoly::Exponents f(2 * n, 0);
  f[j] += 1;
  f[n + i] += 1;
  p.add_term(f, 1);
  return p;
}

std::string format_monomial(const IntPoly::Exponents& exps) {
  const int n = static_cast<int>(exps.size()) / 2;
  std::string out;
  for (int k = 0; k < 2 * n; ++k) {
    if (exps[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += (k < n ? "a" : "b") + std::to_string((k < n ? k : k - n) + 1);
    if (exps[k] > 1) out += "^" + std::to_string(exps[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const IntPoly& p) {
  auto terms = p.terms();
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms) {
    bool negative = c < 0;
    BigInt mag = abs(c);
    std::string mono = format_monomial(exps);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mono == "1") out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace lr
