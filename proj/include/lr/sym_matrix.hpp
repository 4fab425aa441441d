#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "lr/error.hpp"
#include "lr/rational.hpp"

namespace lr {

/// Dense symmetric n x n matrix over either exact rationals or doubles.
/// Storage is full row-major; symmetry is checked on construction and kept by
/// set(), which writes both (i,j) and (j,i).
template <typename T>
class SymMatrix {
 public:
  using Scalar = T;

  SymMatrix() = default;

  explicit SymMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, T(0)) {
    require(n >= 1, ErrorCode::Structural, "matrix size must be positive");
  }

  /// Builds from nested rows; throws Structural when ragged or asymmetric and
  /// Domain when a float entry is NaN or infinite.
  explicit SymMatrix(const std::vector<std::vector<T>>& rows) : SymMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
      require(static_cast<int>(rows[i].size()) == n_, ErrorCode::Structural,
              "matrix rows must all have length n");
      for (int j = 0; j < n_; ++j) {
        if constexpr (std::is_floating_point_v<T>) {
          require(std::isfinite(rows[i][j]), ErrorCode::Domain, "non-finite matrix entry",
                  "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
        entries_[index(i, j)] = rows[i][j];
      }
    }
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        require(entries_[index(i, j)] == entries_[index(j, i)], ErrorCode::Structural,
                "matrix is not symmetric",
                "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }

  int size() const { return n_; }

  const T& operator()(int i, int j) const { return entries_[index(i, j)]; }

  void set(int i, int j, const T& value) {
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
  }

  bool operator==(const SymMatrix& other) const = default;

  bool all_nonnegative() const {
    for (const auto& e : entries_)
      if (e < 0) return false;
    return true;
  }

  bool all_positive() const {
    for (const auto& e : entries_)
      if (!(e > 0)) return false;
    return true;
  }

  std::vector<std::vector<T>> rows() const {
    std::vector<std::vector<T>> out(n_, std::vector<T>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<T> entries_;
};

using RatMatrix = SymMatrix<Rational>;
using RealMatrix = SymMatrix<double>;

inline RealMatrix to_real(const RatMatrix& m) {
  RealMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) out.set(i, j, m(i, j).get_d());
  return out;
}

inline RatMatrix to_rational(const RealMatrix& m) {
  RatMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) out.set(i, j, rational_from_double(m(i, j)));
  return out;
}

}  // namespace lr
