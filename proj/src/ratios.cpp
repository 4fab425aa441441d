#include "lr/ratios.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "lr/error.hpp"
#include "lr/lorentzian.hpp"

namespace lr {

namespace {

void check_n(int n) {
  require(n >= 1, ErrorCode::Structural, "ratio size must be positive");
}

Rational balance_diag(int n, const std::vector<Rational>& offdiag, int i) {
  Rational s = 0;
  for (int j = 0; j < n; ++j)
    if (j != i) s += offdiag[pair_index(n, i, j)];
  return -s / 2;
}

/// alpha scaled by the lcm of its denominators, as machine integers when the
/// sum of any subset of entries cannot overflow.
std::optional<std::vector<std::int64_t>> small_integers(const std::vector<Rational>& alpha) {
  BigInt den = 1;
  for (const auto& a : alpha) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
  std::vector<std::int64_t> out;
  out.reserve(alpha.size());
  const BigInt limit = BigInt(1) << 40;
  for (const auto& a : alpha) {
    BigInt v = a.get_num() * (den / a.get_den());
    if (abs(v) >= limit) return std::nullopt;
    out.push_back(v.get_si());
  }
  return out;
}

std::int64_t to_int64(const Rational& v) {
  require(is_integer(v) && v.get_num().fits_slong_p(), ErrorCode::Domain,
          "exponent is not a machine-size integer", format_rational(v));
  return v.get_num().get_si();
}

bool all_nonpositive_on_cuts(int n, const IntVector& v) {
  for (Subset s = 2; s < (Subset{1} << n); s += 2)
    if (cut_dot(n, v, s) > 0) return false;
  return true;
}

}  // namespace

ReducedRatio reduced_from_ints(int n, const IntVector& coords) {
  require(coords.size() == pair_count(n), ErrorCode::Structural,
          "pair vector length does not match n");
  return ReducedRatio{n, std::vector<Rational>(coords.begin(), coords.end())};
}

FullRatio complete_diagonal(const ReducedRatio& r) {
  check_n(r.n);
  require(r.coords.size() == pair_count(r.n), ErrorCode::Structural,
          "ratio length does not match n");
  FullRatio full{r.n, r.coords, std::vector<Rational>(r.n)};
  for (int i = 0; i < r.n; ++i) full.diag[i] = balance_diag(r.n, r.coords, i);
  return full;
}

bool is_balanced(const FullRatio& r) {
  for (int i = 0; i < r.n; ++i)
    if (r.diag[i] != balance_diag(r.n, r.offdiag, i)) return false;
  return true;
}

void validate(const FullRatio& r) {
  check_n(r.n);
  require(r.offdiag.size() == pair_count(r.n) && r.diag.size() == static_cast<std::size_t>(r.n),
          ErrorCode::Structural, "ratio lengths do not match n");
  for (int i = 0; i < r.n; ++i)
    require(r.diag[i] == balance_diag(r.n, r.offdiag, i), ErrorCode::Structural,
            "diagonal exponents violate the balance identity", "i=" + std::to_string(i + 1));
}

FullRatio add(const FullRatio& a, const FullRatio& b) {
  require(a.n == b.n, ErrorCode::Structural, "ratios have different n");
  FullRatio out = a;
  for (std::size_t k = 0; k < out.offdiag.size(); ++k) out.offdiag[k] += b.offdiag[k];
  for (std::size_t k = 0; k < out.diag.size(); ++k) out.diag[k] += b.diag[k];
  return out;
}

FullRatio scaled(const FullRatio& r, const Rational& c) {
  FullRatio out = r;
  for (auto& x : out.offdiag) x *= c;
  for (auto& x : out.diag) x *= c;
  return out;
}

ReducedRatio scaled(const ReducedRatio& r, const Rational& c) {
  ReducedRatio out = r;
  for (auto& x : out.coords) x *= c;
  return out;
}

FullRatio named_ratio(RatioKind kind, const std::vector<int>& idx, int n) {
  check_n(n);
  const std::size_t arity = kind == RatioKind::AlexandrovFenchel ? 2
                            : kind == RatioKind::Triangular      ? 3
                                                                 : 5;
  require(idx.size() == arity, ErrorCode::Domain, "wrong number of indices for ratio kind",
          std::to_string(idx.size()) + " given, " + std::to_string(arity) + " expected");
  for (int i : idx)
    require(i >= 0 && i < n, ErrorCode::Domain, "ratio index out of range",
            std::to_string(i + 1) + " not in [1," + std::to_string(n) + "]");

  FullRatio r{n, std::vector<Rational>(pair_count(n)), std::vector<Rational>(n)};
  auto term = [&](int i, int j, int c) {
    if (i == j) r.diag[i] += c;
    else r.offdiag[pair_index(n, i, j)] += c;
  };
  switch (kind) {
    case RatioKind::AlexandrovFenchel:
      term(idx[0], idx[0], 1);
      term(idx[1], idx[1], 1);
      term(idx[0], idx[1], -2);
      break;
    case RatioKind::Triangular:
      term(idx[0], idx[1], 1);
      term(idx[2], idx[2], 1);
      term(idx[0], idx[2], -1);
      term(idx[1], idx[2], -1);
      break;
    case RatioKind::Pentagonal: {
      int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4];
      term(i, j, 1), term(i, k, 1), term(j, k, 1);
      term(l, l, 1), term(l, m, 1), term(m, m, 1);
      for (int top : {i, j, k}) term(top, l, -1), term(top, m, -1);
      break;
    }
  }
  bool zero = true;
  for (const auto& x : r.offdiag) zero = zero && x == 0;
  for (const auto& x : r.diag) zero = zero && x == 0;
  require(!zero, ErrorCode::Domain, "index multiplicity collapses the ratio to zero");
  require(is_balanced(r), ErrorCode::Domain, "index multiplicity gives an unbalanced ratio");
  return r;
}

bool has_integral_exponents(const FullRatio& r) {
  for (const auto& x : r.offdiag)
    if (!is_integer(x)) return false;
  for (const auto& x : r.diag)
    if (!is_integer(x)) return false;
  return true;
}

namespace {

template <typename F>
void for_each_exponent(const FullRatio& r, F&& f) {
  for (int i = 0; i < r.n; ++i) {
    f(i, i, r.diag[i]);
    for (int j = i + 1; j < r.n; ++j) f(i, j, r.offdiag[pair_index(r.n, i, j)]);
  }
}

template <typename M>
void check_shape(const FullRatio& r, const M& m) {
  validate(r);
  require(m.size() == r.n, ErrorCode::Structural, "matrix size does not match ratio",
          std::to_string(m.size()) + " vs " + std::to_string(r.n));
}

std::string entry_label(int i, int j) {
  return "p" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

RatioValue<Rational> evaluate(const FullRatio& r, const RatMatrix& m) {
  check_shape(r, m);
  require(has_integral_exponents(r), ErrorCode::Domain,
          "exact evaluation needs integral exponents");
  RatioValue<Rational> out{Rational(1)};
  for_each_exponent(r, [&](int i, int j, const Rational& a) {
    const Rational& base = m(i, j);
    if (a == 0) {
      if (base == 0) out.zero_pow_zero = true;
      return;
    }
    require(!(base == 0 && a < 0), ErrorCode::Domain, "zero entry under a negative exponent",
            entry_label(i, j));
    out.value *= pow_int(base, to_int64(a));
  });
  return out;
}

RatioValue<double> evaluate(const FullRatio& r, const RealMatrix& m) {
  check_shape(r, m);
  RatioValue<double> out{1.0};
  double log_sum = 0.0;
  bool zero = false;
  bool negative = false;
  for_each_exponent(r, [&](int i, int j, const Rational& a) {
    double base = m(i, j);
    if (a == 0) {
      if (base == 0.0) out.zero_pow_zero = true;
      return;
    }
    if (base == 0.0) {
      require(a > 0, ErrorCode::Domain, "zero entry under a negative exponent", entry_label(i, j));
      zero = true;
      return;
    }
    if (base < 0.0) {
      require(is_integer(a), ErrorCode::Domain, "negative entry under a fractional exponent",
              entry_label(i, j));
      if (mpz_odd_p(a.get_num_mpz_t())) negative = !negative;
      base = -base;
    }
    log_sum += a.get_d() * std::log(base);
  });
  out.value = zero ? 0.0 : (negative ? -1.0 : 1.0) * std::exp(log_sum);
  return out;
}

bool value_at_most(const FullRatio& r, const RatMatrix& m, const Rational& c) {
  check_shape(r, m);
  BigInt q = 1;
  for_each_exponent(r, [&](int, int, const Rational& a) {
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), a.get_den_mpz_t());
  });
  require(q.fits_slong_p(), ErrorCode::Capability, "exponent denominators too large");
  if (q == 1) return evaluate(r, m).value <= c;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j)
      require(m(i, j) >= 0, ErrorCode::Domain, "fractional exponents need nonnegative entries");
  FullRatio integral = scaled(r, Rational(q));
  Rational lhs = evaluate(integral, m).value;
  if (c < 0) return false;
  return lhs <= pow_int(c, q.get_si());
}

BoundednessCertificate is_bounded(const ReducedRatio& r) {
  check_n(r.n);
  require(r.n <= kMaxSubsetSize, ErrorCode::Capability, "boundedness check supports n <= 20");
  require(r.coords.size() == pair_count(r.n), ErrorCode::Structural,
          "ratio length does not match n");
  BoundednessCertificate cert;
  const int n = r.n;
  auto record = [&](Subset s, int sign_of_dot) {
    if (sign_of_dot == 0) cert.tight_subsets.push_back(s);
    else if (sign_of_dot > 0 && cert.bounded) {
      cert.bounded = false;
      cert.violating_subset = s;
      cert.violation = cut_dot(n, r.coords, s);
    }
  };
  if (auto ints = small_integers(r.coords)) {
    for (Subset s = 2; s < (Subset{1} << n); s += 2) {
      std::int64_t d = cut_dot(n, *ints, s);
      record(s, (d > 0) - (d < 0));
    }
  } else {
    for (Subset s = 2; s < (Subset{1} << n); s += 2) record(s, sgn(cut_dot(n, r.coords, s)));
  }
  return cert;
}

int tight_rank(int n, const std::vector<Subset>& tight_subsets) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(tight_subsets.size());
  for (Subset s : tight_subsets) {
    auto c = cut_vector(n, s);
    rows.emplace_back(c.coords.begin(), c.coords.end());
  }
  return exact_rank(rows);
}

ReducedRatio normalize_ratio(const ReducedRatio& r) {
  Rational sum = 0;
  bool zero = true;
  for (const auto& x : r.coords) {
    sum += x;
    zero = zero && x == 0;
  }
  require(!zero, ErrorCode::Domain, "the zero ratio cannot be normalized");
  if (sum >= 0) {
    if (is_bounded(r).bounded)
      fail(ErrorCode::InvariantViolation,
           "nonzero bounded ratio has nonnegative coordinate sum", format_rational(sum));
    fail(ErrorCode::Domain, "ratio is unbounded and its coordinate sum is not negative",
         format_rational(sum));
  }
  return scaled(r, Rational(-1) / sum);
}

namespace {

class DecompositionSearch {
 public:
  DecompositionSearch(int n, const std::vector<FacetNormal>& basis) : n_(n), basis_(basis) {}

  bool run(const IntVector& residual, std::size_t start, long budget) {
    bool is_zero = true;
    for (auto x : residual) is_zero = is_zero && x == 0;
    if (is_zero) return true;
    if (budget == 0) return false;
    auto key = std::make_pair(residual, start);
    if (failed_.count(key)) return false;
    IntVector next(residual.size());
    for (std::size_t b = start; b < basis_.size(); ++b) {
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = residual[k] - basis_[b].coords[k];
      if (!all_nonpositive_on_cuts(n_, next)) continue;
      if (run(next, b, budget - 1)) {
        path_.push_back(b);
        return true;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<std::size_t>& path() const { return path_; }

 private:
  int n_;
  const std::vector<FacetNormal>& basis_;
  std::set<std::pair<IntVector, std::size_t>> failed_;
  std::vector<std::size_t> path_;
};

}  // namespace

std::optional<Decomposition> decompose(const FullRatio& r, const std::vector<FacetNormal>& basis) {
  validate(r);
  require(r.n <= kMaxSubsetSize, ErrorCode::Capability, "decomposition supports n <= 20");
  require(has_integral_exponents(r), ErrorCode::Domain, "decomposition needs an integral ratio");
  for (std::size_t b = 0; b < basis.size(); ++b)
    require(basis[b].n == r.n && basis[b].coords.size() == pair_count(r.n),
            ErrorCode::Structural, "basis element does not match the ratio size",
            "index " + std::to_string(b));
  IntVector target;
  long budget = 0;
  for (const auto& x : r.offdiag) {
    target.push_back(to_int64(x));
    budget += std::labs(target.back());
  }
  require(all_nonpositive_on_cuts(r.n, target), ErrorCode::Domain,
          "only bounded ratios can be decomposed");

  DecompositionSearch search(r.n, basis);
  if (!search.run(target, 0, budget)) return std::nullopt;
  Decomposition out;
  for (auto it = search.path().rbegin(); it != search.path().rend(); ++it) {
    if (!out.empty() && out.back().first == *it) ++out.back().second;
    else out.emplace_back(*it, 1);
  }
  return out;
}

}  // namespace lr
