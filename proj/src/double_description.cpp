#include "lr/double_description.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "lr/error.hpp"
#include "lr/lorentzian.hpp"
#include "lr/rational.hpp"

namespace lr {

namespace {

struct Ray {
  IntVector coords;
  TightSet zeros;
};

std::int64_t checked_narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorCode::Capability, "double description coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

__int128 dot(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntVector primitive(const std::vector<__int128>& v) {
  __int128 g = 0;
  for (auto x : v) g = gcd128(g, x);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_narrow(g == 0 ? v[i] : v[i] / g);
  return out;
}

/// Greedily picks rows that raise the rank until it reaches dim.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Rational>> basis;  // echelon form of chosen rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < dim; ++r) {
    std::vector<Rational> v(rows[r].begin(), rows[r].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::size_t p = pivots[b];
      if (v[p] == 0) continue;
      Rational f = v[p] / basis[b][p];
      for (std::size_t j = 0; j < dim; ++j) v[j] -= f * basis[b][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    basis.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

/// Columns of -B^{-1} for the square basis matrix B, made primitive.
std::vector<IntVector> initial_rays(const std::vector<IntVector>& rows,
                                    const std::vector<std::size_t>& basis, std::size_t dim) {
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = rows[basis[i]][j];
    aug[i][dim + i] = 1;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    Rational inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * dim; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  std::vector<IntVector> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    BigInt den = 1;
    for (std::size_t i = 0; i < dim; ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), aug[i][dim + k].get_den_mpz_t());
    std::vector<__int128> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Rational scaled = -aug[i][dim + k] * den;
      require(scaled.get_num().fits_slong_p(), ErrorCode::Capability,
              "initial ray coefficient overflow");
      v[i] = scaled.get_num().get_si();
    }
    rays.push_back(primitive(v));
  }
  return rays;
}

class Enumerator {
 public:
  Enumerator(const std::vector<IntVector>& rows, const DDOptions& options)
      : rows_(rows), options_(options), start_(std::chrono::steady_clock::now()) {
    dim_ = rows.empty() ? 0 : rows[0].size();
    memory_limit_mb_ = options.memory_limit_mb != 0 ? options.memory_limit_mb
                                                    : resource_limit_from_env();
  }

  std::vector<IntVector> run() {
    require(!rows_.empty() && dim_ > 0, ErrorCode::Structural, "empty constraint system");
    require(rows_.size() <= kMaxDDConstraints, ErrorCode::Capability,
            "too many constraints for double description",
            std::to_string(rows_.size()) + " > " + std::to_string(kMaxDDConstraints));
    for (const auto& r : rows_)
      require(r.size() == dim_, ErrorCode::Structural, "constraint rows differ in length");

    std::vector<std::size_t> basis = independent_rows(rows_, dim_);
    require(basis.size() == dim_, ErrorCode::Capability,
            "constraint rows are rank deficient; the cone is not pointed");

    std::vector<IntVector> start = initial_rays(rows_, basis, dim_);
    std::vector<bool> done(rows_.size(), false);
    for (auto b : basis) done[b] = true;
    processed_ = basis.size();
    for (std::size_t k = 0; k < dim_; ++k) {
      Ray ray{start[k], {}};
      for (std::size_t i = 0; i < dim_; ++i)
        if (i != k) ray.zeros.set(basis[i]);
      rays_.push_back(std::move(ray));
    }

    while (processed_ < rows_.size()) {
      std::size_t next = pick_next(done);
      add_constraint(next);
      done[next] = true;
      ++processed_;
      check_budget();
    }

    std::vector<IntVector> out;
    out.reserve(rays_.size());
    for (auto& r : rays_) out.push_back(std::move(r.coords));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t pick_next(const std::vector<bool>& done) const {
    std::size_t best = rows_.size();
    std::size_t best_zeros = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (done[c]) continue;
      if (options_.ordering == DDOptions::Ordering::Static) return c;
      std::size_t zeros = 0;
      for (const auto& r : rays_)
        if (dot(rows_[c], r.coords) == 0) ++zeros;
      if (zeros < best_zeros) {
        best_zeros = zeros;
        best = c;
      }
    }
    return best;
  }

  bool adjacent(std::size_t p, std::size_t q, const TightSet& common) const {
    if (common.count() + 2 < dim_) return false;
    if (options_.adjacency == DDOptions::Adjacency::Algebraic) {
      std::vector<std::vector<Rational>> sub;
      for (std::size_t c = 0; c < rows_.size(); ++c)
        if (common.test(c)) sub.emplace_back(rows_[c].begin(), rows_[c].end());
      return exact_rank(sub) + 2 == static_cast<int>(dim_);
    }
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      if (r == p || r == q) continue;
      if ((rays_[r].zeros & common) == common) return false;
    }
    return true;
  }

  void add_constraint(std::size_t c) {
    const IntVector& a = rows_[c];
    std::vector<__int128> values(rays_.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      values[r] = dot(a, rays_[r].coords);
      if (values[r] > 0) pos.push_back(r);
      else if (values[r] < 0) neg.push_back(r);
    }
    std::vector<Ray> created;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        TightSet common = rays_[p].zeros & rays_[q].zeros;
        if (!adjacent(p, q, common)) continue;
        // values[p] * r_q - values[q] * r_p is tight on row c and lies in the cone.
        std::vector<__int128> v(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
          v[i] = values[p] * rays_[q].coords[i] - values[q] * rays_[p].coords[i];
        Ray ray{primitive(v), common};
        ray.zeros.set(c);
        created.push_back(std::move(ray));
      }
      check_budget(created.size());
    }
    std::vector<Ray> kept;
    kept.reserve(rays_.size() - pos.size() + created.size());
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      if (values[r] > 0) continue;
      if (values[r] == 0) rays_[r].zeros.set(c);
      kept.push_back(std::move(rays_[r]));
    }
    for (auto& r : created) kept.push_back(std::move(r));
    rays_ = std::move(kept);
  }

  void check_budget(std::size_t pending = 0) const {
    std::size_t count = rays_.size() + pending;
    auto progress = [&] {
      return "processed " + std::to_string(processed_) + "/" + std::to_string(rows_.size()) +
             " constraints, " + std::to_string(count) + " rays";
    };
    if (memory_limit_mb_ != 0) {
      std::size_t bytes = count * (dim_ * sizeof(std::int64_t) + sizeof(Ray));
      if (bytes > memory_limit_mb_ * 1024 * 1024) {
        fail(ErrorCode::ResourceLimit, "double description memory budget exceeded", progress());
      }
    }
    if (options_.time_limit_seconds > 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > options_.time_limit_seconds) {
        fail(ErrorCode::ResourceLimit, "double description time budget exceeded", progress());
      }
    }
  }

  const std::vector<IntVector>& rows_;
  DDOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::size_t dim_ = 0;
  std::size_t memory_limit_mb_ = 0;
  std::size_t processed_ = 0;
  std::vector<Ray> rays_;
};

}  // namespace

std::size_t resource_limit_from_env() {
  const char* env = std::getenv("LR_RESOURCE_LIMIT_MB");
  if (env == nullptr) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env) return 0;
  return static_cast<std::size_t>(v);
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints,
                                    const DDOptions& options) {
  Enumerator enumerator(constraints, options);
  return enumerator.run();
}

}  // namespace lr
