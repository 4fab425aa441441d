#include "lr/lorentzian.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace lr {

double SplitRng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt den = 1;
  for (const auto& v : values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  return den;
}

/// Berkowitz recurrence; returns det(lambda I - A), highest degree first.
std::vector<BigInt> berkowitz(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<BigInt> poly{BigInt(1), BigInt(-a[0][0])};
  for (int r = 1; r < n; ++r) {
    // toeplitz = (1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S)
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -a[r][r];
    std::vector<BigInt> v(r);
    for (int i = 0; i < r; ++i) v[i] = a[i][r];
    for (int k = 2; k <= r + 1; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += a[r][i] * v[i];
      toeplitz[k] = -dot;
      if (k == r + 1) break;
      std::vector<BigInt> next(r);
      for (int i = 0; i < r; ++i) {
        BigInt s = 0;
        for (int j = 0; j < r; ++j) s += a[i][j] * v[j];
        next[i] = std::move(s);
      }
      v = std::move(next);
    }
    std::vector<BigInt> updated(r + 2);
    for (int i = 0; i < r + 2; ++i) {
      BigInt s = 0;
      for (int j = 0; j <= std::min(i, r); ++j) s += toeplitz[i - j] * poly[j];
      updated[i] = std::move(s);
    }
    poly = std::move(updated);
  }
  return poly;
}

int bareiss_rank(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        BigInt t = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

IntMatrix integer_rows(const std::vector<std::vector<Rational>>& rows) {
  IntMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt den = common_denominator(row);
    std::vector<BigInt> ints;
    ints.reserve(row.size());
    for (const auto& v : row) {
      Rational scaled = v * den;
      ints.push_back(scaled.get_num());
    }
    out.push_back(std::move(ints));
  }
  return out;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const RatMatrix& m) {
  const int n = m.size();
  std::vector<Rational> all;
  all.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) all.push_back(m(i, j));
  BigInt den = common_denominator(all);
  IntMatrix scaled(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled[i][j] = Rational(m(i, j) * den).get_num();
  std::vector<BigInt> high_first = berkowitz(scaled);
  // det(lambda I - D M) = D^n det(mu I - M) with lambda = D mu, so the
  // coefficient of mu^d is c_d / D^(n-d).
  std::vector<Rational> ascending(n + 1);
  Rational den_power = 1;
  for (int d = n; d >= 0; --d) {
    ascending[d] = Rational(high_first[n - d]) / den_power;
    den_power *= den;
  }
  return ascending;
}

EigenSignature exact_signature(const RatMatrix& m) {
  std::vector<Rational> poly = characteristic_polynomial(m);
  const int n = m.size();
  EigenSignature sig;
  while (sig.n_zero <= n && poly[sig.n_zero] == 0) ++sig.n_zero;
  int last_sign = 0;
  for (int d = n; d >= 0; --d) {
    int s = sgn(poly[d]);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++sig.n_pos;
    last_sign = s;
  }
  sig.n_neg = n - sig.n_pos - sig.n_zero;
  return sig;
}

EigenSignature float_signature(const RealMatrix& m) {
  const int n = m.size();
  Eigen::MatrixXd dense(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dense(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& eig = solver.eigenvalues();
  double norm = eig.cwiseAbs().maxCoeff();
  double threshold = 1e-9 * std::max(1.0, norm);
  EigenSignature sig;
  for (int i = 0; i < n; ++i) {
    if (std::abs(eig(i)) <= threshold) ++sig.n_zero;
    else if (eig(i) > 0) ++sig.n_pos;
    else ++sig.n_neg;
  }
  return sig;
}

int exact_rank(const std::vector<std::vector<Rational>>& rows) {
  return bareiss_rank(integer_rows(rows));
}

int exact_rank(const RatMatrix& m) { return exact_rank(m.rows()); }

LorentzianReport is_lorentzian(const RatMatrix& m) {
  LorentzianReport report;
  report.signature = exact_signature(m);
  report.lorentzian = m.all_nonnegative() && report.signature.n_pos <= 1;
  return report;
}

LorentzianReport is_lorentzian(const RealMatrix& m) {
  LorentzianReport report;
  report.signature = float_signature(m);
  report.lorentzian = m.all_nonnegative() && report.signature.n_pos <= 1;
  return report;
}

RealMatrix normalize_diagonal(const RealMatrix& m) {
  std::vector<double> c(m.size());
  for (int i = 0; i < m.size(); ++i) {
    require(m(i, i) > 0, ErrorCode::Domain, "normalization needs a positive diagonal");
    c[i] = 1.0 / std::sqrt(m(i, i));
  }
  RealMatrix out = scale(m, c);
  for (int i = 0; i < m.size(); ++i) out.set(i, i, 1.0);
  return out;
}

RatMatrix witness_pentagonal(const Rational& t) {
  require(t >= 0, ErrorCode::Domain, "witness parameter t must be nonnegative");
  const Rational zero(0), one(1), two(2), four(4);
  return RatMatrix(std::vector<std::vector<Rational>>{
      {zero, one, one, t, two + t},
      {one, zero, one, two, two},
      {one, one, zero, two + t, t},
      {t, two, two + t, four * t, four + four * t},
      {two + t, two, t, four + four * t, four * t},
  });
}

namespace {

template <typename T>
SymMatrix<T> tp_pattern(const T& high) {
  SymMatrix<T> m(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      bool top = i < 3 && j < 3;
      bool bottom = i >= 3 && j >= 3;
      if (top && i == j) m.set(i, j, T(0));
      else if (top || bottom) m.set(i, j, high);
      else m.set(i, j, T(1));
    }
  return m;
}

}  // namespace

RealMatrix witness_tp(double p) {
  require(p > 0 && std::isfinite(p), ErrorCode::Domain, "witness exponent p must be positive");
  return tp_pattern<double>(std::exp2(p / 2.0));
}

RatMatrix witness_tp_exact(const Rational& p) {
  require(p > 0, ErrorCode::Domain, "witness exponent p must be positive");
  Rational half = p / 2;
  require(is_integer(half), ErrorCode::Capability,
          "exact witness needs p to be an even integer", format_rational(p));
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, half.get_num().get_ui());
  return tp_pattern<Rational>(Rational(power));
}

Rank2Params<double> sample_rank2_params(int n, SplitRng& rng, const SamplerConfig& config) {
  require(n >= 2, ErrorCode::Domain, "rank-2 sampler needs n >= 2");
  Rank2Params<double> params;
  params.a.resize(n);
  params.b.resize(n);
  for (int i = 0; i < n; ++i) params.a[i] = std::exp(rng.uniform(config.log_lo, config.log_hi));
  for (int i = 0; i < n; ++i) params.b[i] = std::exp(rng.uniform(config.log_lo, config.log_hi));
  return params;
}

RatMatrix sample_rank2(int n, SplitRng& rng, const SamplerConfig& config) {
  Rank2Params<double> p = sample_rank2_params(n, rng, config);
  Rank2Params<Rational> exact;
  for (int i = 0; i < n; ++i) {
    exact.a.push_back(rational_from_double(p.a[i]));
    exact.b.push_back(rational_from_double(p.b[i]));
  }
  return rank2_hessian(exact);
}

RatMatrix sample_rank2(int n, std::uint64_t seed, const SamplerConfig& config) {
  SplitRng rng(seed);
  return sample_rank2(n, rng, config);
}

RealMatrix sample_lorentzian(int n, SplitRng& rng, const SamplerConfig& config) {
  require(n >= 2, ErrorCode::Domain, "Lorentzian sampler needs n >= 2");
  std::vector<double> u(n);
  for (auto& x : u) x = std::exp(rng.uniform(config.log_lo, config.log_hi));
  int k = static_cast<int>(rng.uniform_int(1, n - 1));
  std::vector<std::vector<double>> b(n, std::vector<double>(k));
  for (auto& row : b)
    for (auto& x : row) x = rng.normal();
  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  double eps = INFINITY;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < k; ++l) gram[i][j] += b[i][l] * b[j][l];
      if (gram[i][j] != 0.0) eps = std::min(eps, u[i] * u[j] / std::abs(gram[i][j]));
    }
  if (!std::isfinite(eps)) eps = 0.0;
  eps *= rng.uniform(0.0, 0.999);
  RealMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, u[i] * u[j] - eps * gram[i][j]);
  return m;
}

}  // namespace lr
