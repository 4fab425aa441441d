#include "lr/subfree.hpp"

#include "lr/error.hpp"

namespace lr {

namespace {

// Product of entry polynomials raised to the given powers. Multiplying one
// binomial at a time keeps intermediate term counts small.
IntPoly product(int n, const std::vector<std::pair<std::pair<int, int>, long>>& factors) {
  IntPoly out = IntPoly::constant(n, 1);
  for (const auto& [ij, e] : factors) {
    IntPoly entry = poly_from_entry(ij.first, ij.second, n);
    for (long k = 0; k < e; ++k) out = poly_mul(out, entry);
  }
  return out;
}

long to_long(const Rational& v) {
  require(v.get_num().fits_slong_p(), ErrorCode::Capability, "exponent too large");
  return v.get_num().get_si();
}

}  // namespace

SubfreeReport subfree_check(const FullRatio& r) {
  validate(r);
  require(has_integral_exponents(r), ErrorCode::Domain, "subtraction-free check needs integral exponents");
  auto cert = is_bounded(reduce(r));
  require(cert.bounded, ErrorCode::Domain, "ratio is unbounded",
          cert.violating_subset ? format_subset(*cert.violating_subset) : std::string());

  const int n = r.n;
  std::vector<std::pair<std::pair<int, int>, long>> pos, neg;
  long s = 0;
  auto collect = [&](int i, int j, const Rational& a) {
    long e = to_long(a);
    if (e > 0) pos.push_back({{i, j}, e});
    if (e < 0) neg.push_back({{i, j}, -e});
  };
  for (int i = 0; i < n; ++i) {
    collect(i, i, r.diag[i]);
    s += to_long(r.diag[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) collect(i, j, r.offdiag[pair_index(n, i, j)]);

  SubfreeReport out;
  out.diagonal_sum = static_cast<int>(s);
  out.rearranged = s < 0;
  require(s <= 4096 && s >= -4096, ErrorCode::Capability, "power of two too large");
  BigInt two_pow = BigInt(1) << static_cast<unsigned long>(s < 0 ? -s : s);

  IntPoly negative = product(n, neg);
  IntPoly positive = product(n, pos);
  if (s >= 0) negative = poly_scale(negative, two_pow);
  else positive = poly_scale(positive, two_pow);
  out.difference = poly_sub(negative, positive);
  out.term_count = out.difference.term_count();
  for (auto& term : out.difference.terms())
    if (term.second < 0) out.negative_terms.push_back(std::move(term));
  out.holds = out.negative_terms.empty();
  return out;
}

std::vector<SubfreeReport> subfree_check_all(const std::vector<FullRatio>& ratios, unsigned threads) {
  std::vector<SubfreeReport> out(ratios.size());
  parallel_for(ratios.size(), threads, [&](std::size_t k) { out[k] = subfree_check(ratios[k]); });
  return out;
}

}  // namespace lr
