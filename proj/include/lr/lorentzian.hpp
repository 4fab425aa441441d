#pragma once

#include <cstdint>
#include <vector>

#include "lr/random.hpp"
#include "lr/rational.hpp"
#include "lr/sym_matrix.hpp"

namespace lr {

struct EigenSignature {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;

  int rank() const { return n_pos + n_neg; }
  int size() const { return n_pos + n_neg + n_zero; }
  bool operator==(const EigenSignature&) const = default;
};

struct LorentzianReport {
  bool lorentzian = false;
  EigenSignature signature;
};

/// Coefficients of det(lambda*I - M) in ascending degree (index d holds the
/// coefficient of lambda^d). Computed with the division-free Berkowitz
/// recurrence on the integer matrix obtained by clearing denominators.
std::vector<Rational> characteristic_polynomial(const RatMatrix& m);

/// Exact signature of a symmetric rational matrix. Eigenvalues are real, so
/// Descartes' rule on the characteristic polynomial is exact: sign variations
/// count positive roots and trailing zero coefficients count the zero root.
EigenSignature exact_signature(const RatMatrix& m);

/// Signature from a symmetric eigensolver; |lambda| <= 1e-9 * max(1, ||M||_2)
/// counts as zero.
EigenSignature float_signature(const RealMatrix& m);

/// Rank by fraction-free (Bareiss) elimination.
int exact_rank(const RatMatrix& m);
int exact_rank(const std::vector<std::vector<Rational>>& rows);

LorentzianReport is_lorentzian(const RatMatrix& m);
LorentzianReport is_lorentzian(const RealMatrix& m);

template <typename T>
struct Rank2Params {
  std::vector<T> a;
  std::vector<T> b;
};

/// Hessian of (sum a_i x_i)(sum b_i x_i): p_ij = a_i b_j + a_j b_i.
template <typename T>
SymMatrix<T> rank2_hessian(const Rank2Params<T>& params) {
  require(params.a.size() == params.b.size(), ErrorCode::Structural,
          "rank-2 parameters a and b must have equal length");
  require(!params.a.empty(), ErrorCode::Structural, "rank-2 parameters are empty");
  for (std::size_t i = 0; i < params.a.size(); ++i)
    require(params.a[i] >= 0 && params.b[i] >= 0, ErrorCode::Domain,
            "rank-2 parameters must be nonnegative");
  int n = static_cast<int>(params.a.size());
  SymMatrix<T> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, params.a[i] * params.b[j] + params.a[j] * params.b[i]);
  return m;
}

/// (c_i c_j p_ij). Throws Domain unless every c_i > 0.
template <typename T>
SymMatrix<T> scale(const SymMatrix<T>& m, const std::vector<T>& c) {
  require(static_cast<int>(c.size()) == m.size(), ErrorCode::Structural,
          "scaling vector length must equal matrix size");
  for (const auto& ci : c) require(ci > 0, ErrorCode::Domain, "scaling factors must be positive");
  SymMatrix<T> out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) out.set(i, j, c[i] * c[j] * m(i, j));
  return out;
}

/// Scales a matrix with positive diagonal to unit diagonal.
RealMatrix normalize_diagonal(const RealMatrix& m);

/// The 5x5 rank-3 Lorentzian family M(t), t >= 0, on which the pentagonal
/// ratio equals 16(1+t)/(2+t)^2.
RatMatrix witness_pentagonal(const Rational& t);

/// Matrix with 2^{p/2} on the pairs inside {1,2,3} and inside {4,5}, zeros on
/// the first three diagonal entries and 1 elsewhere; its pentagonal ratio is
/// 8^p. Throws Domain for p <= 0.
RealMatrix witness_tp(double p);

/// Exact variant; requires p to be a positive even integer so that 2^{p/2}
/// is rational (Capability error otherwise).
RatMatrix witness_tp_exact(const Rational& p);

struct SamplerConfig {
  /// Entries of a and b are exp(U), U uniform on [log_lo, log_hi].
  double log_lo = -3.0;
  double log_hi = 3.0;
};

Rank2Params<double> sample_rank2_params(int n, SplitRng& rng, const SamplerConfig& config = {});

/// Exact rank-2 Lorentzian sample: draws a, b in floating point, converts them
/// exactly to rationals and forms the Hessian in rational arithmetic.
RatMatrix sample_rank2(int n, SplitRng& rng, const SamplerConfig& config = {});
RatMatrix sample_rank2(int n, std::uint64_t seed, const SamplerConfig& config = {});

/// Generic (typically full-rank) Lorentzian sample u u^T - eps B B^T with
/// u = exp(U) and eps chosen so every entry stays positive.
RealMatrix sample_lorentzian(int n, SplitRng& rng, const SamplerConfig& config = {});

}  // namespace lr
