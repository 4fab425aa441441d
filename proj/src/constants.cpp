#include "lr/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lr/error.hpp"

namespace lr {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double xlogx(double t) { return t > 0 ? t * std::log(t) : 0.0; }

/// w log x with 0 log 0 = 0 and w log 0 = -inf for w > 0.
double weighted_log(double w, double x) {
  if (w == 0) return 0.0;
  return x > 0 ? w * std::log(x) : kNegInf;
}

BarycentricRatio sorted_desc(const BarycentricRatio& q) {
  std::array<double, 3> v{q.a, q.b, q.c};
  std::sort(v.begin(), v.end(), std::greater<>());
  return {v[0], v[1], v[2]};
}

double entropy_branch(const BarycentricRatio& s) {
  double two_a = std::max(0.0, 2 * s.a - 1);
  double one_b = std::max(0.0, 1 - 2 * s.b);
  double one_c = std::max(0.0, 1 - 2 * s.c);
  double log_f = std::log(2.0) + xlogx(s.a) + xlogx(s.b) + xlogx(s.c) + xlogx(two_a) -
                 xlogx(one_b) - xlogx(one_c);
  return std::exp(log_f);
}

}  // namespace

void validate(const BarycentricRatio& q) {
  for (double v : {q.a, q.b, q.c})
    require(std::isfinite(v) && v >= 0, ErrorCode::Domain, "barycentric weights must be nonnegative");
  require(std::abs(q.a + q.b + q.c - 1) <= 1e-12, ErrorCode::Domain,
          "barycentric weights must sum to 1");
}

double circle_discriminant(const BarycentricRatio& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c - 2 * q.a * q.b - 2 * q.a * q.c - 2 * q.b * q.c;
}

double theorem_c(const BarycentricRatio& q) {
  validate(q);
  double disc = circle_discriminant(q);
  if (disc < -1e-12) return 1.0;
  double f = entropy_branch(sorted_desc(q));
  if (disc <= 1e-12) {
    require(std::abs(f - 1.0) <= 1e-6, ErrorCode::InvariantViolation,
            "the two branches disagree on the inscribed circle", std::to_string(f));
    return 1.0;
  }
  return f;
}

namespace {

struct LogR {
  double b, c, e;  // e = a - b - c
  double operator()(double x, double y) const {
    double s = 1 + std::sqrt(std::max(0.0, (1 - x) * (1 - y)));
    return weighted_log(b, x) + weighted_log(c, y) + e * std::log(s);
  }
};

struct Point {
  double x, y, v;
};

/// Newton steps on the interior with finite-difference derivatives.
Point newton(const LogR& f, Point p) {
  const double h = 1e-6;
  for (int step = 0; step < 50; ++step) {
    if (p.x <= 2 * h || p.x >= 1 - 2 * h || p.y <= 2 * h || p.y >= 1 - 2 * h) break;
    double fxx = (f(p.x + h, p.y) - 2 * p.v + f(p.x - h, p.y)) / (h * h);
    double fyy = (f(p.x, p.y + h) - 2 * p.v + f(p.x, p.y - h)) / (h * h);
    double fxy = (f(p.x + h, p.y + h) - f(p.x + h, p.y - h) - f(p.x - h, p.y + h) +
                  f(p.x - h, p.y - h)) / (4 * h * h);
    double gx = (f(p.x + h, p.y) - f(p.x - h, p.y)) / (2 * h);
    double gy = (f(p.x, p.y + h) - f(p.x, p.y - h)) / (2 * h);
    double det = fxx * fyy - fxy * fxy;
    if (!(det > 0 && fxx < 0)) break;  // not locally concave
    double dx = -(fyy * gx - fxy * gy) / det;
    double dy = -(fxx * gy - fxy * gx) / det;
    Point next{std::clamp(p.x + dx, 0.0, 1.0), std::clamp(p.y + dy, 0.0, 1.0), 0};
    next.v = f(next.x, next.y);
    if (!(next.v > p.v)) break;
    bool small = std::abs(next.x - p.x) + std::abs(next.y - p.y) < 1e-14;
    p = next;
    if (small) break;
  }
  return p;
}

/// Compass search in the box, halving the step down to 1e-13.
Point compass(const LogR& f, Point p, double step) {
  static const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  while (step > 1e-13) {
    bool moved = false;
    for (const auto& d : dirs) {
      double x = std::clamp(p.x + d[0] * step, 0.0, 1.0);
      double y = std::clamp(p.y + d[1] * step, 0.0, 1.0);
      double v = f(x, y);
      if (v > p.v) {
        p = {x, y, v};
        moved = true;
      }
    }
    if (!moved) step /= 2;
  }
  return p;
}

}  // namespace

N3Maximum verify_n3(const BarycentricRatio& q, int grid, unsigned threads) {
  validate(q);
  require(grid >= 2, ErrorCode::Domain, "grid resolution must be at least 2");
  BarycentricRatio s = sorted_desc(q);
  LogR f{s.b, s.c, s.a - s.b - s.c};
  const double h = 1.0 / (grid - 1);

  std::vector<Point> row_best(grid, Point{0, 0, kNegInf});
  parallel_for(static_cast<std::size_t>(grid), threads, [&](std::size_t i) {
    double x = static_cast<double>(i) * h;
    Point best{x, 0, kNegInf};
    for (int j = 0; j < grid; ++j) {
      double y = j * h;
      double v = f(x, y);
      if (v > best.v) best = {x, y, v};
    }
    row_best[i] = best;
  });
  Point best = row_best[0];
  for (const auto& p : row_best)
    if (p.v > best.v) best = p;

  best = compass(f, newton(f, best), h);

  N3Maximum out;
  double den_x = s.a + s.b - s.c;
  double den_y = s.a - s.b + s.c;
  if (den_x > 0 && den_y > 0) {
    double x0 = 4 * s.a * s.b / (den_x * den_x);
    double y0 = 4 * s.a * s.c / (den_y * den_y);
    if (x0 >= 0 && x0 <= 1 && y0 >= 0 && y0 <= 1) {
      double v0 = f(x0, y0);
      if (v0 > best.v) {
        best = {x0, y0, v0};
        out.critical_point_used = true;
      }
    }
  }
  out.value = std::exp(best.v);
  out.x = best.x;
  out.y = best.y;
  return out;
}

double fp_delta3(double a, double b, double c, double p) {
  for (double v : {a, b, c})
    require(std::isfinite(v) && v >= 0, ErrorCode::Domain, "weights must be nonnegative");
  require(std::isfinite(p) && p >= 0, ErrorCode::Domain, "p must be nonnegative");
  if (a > b + c) return std::exp2(a * p);
  if (b > a + c) return std::exp2(b * p);
  if (c > a + b) return std::exp2(c * p);
  return std::exp2(p * (a + b + c) / 2);
}

HardLemmaResult hard_lemma_check(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
  for (const auto& v : x) require(v > 0, ErrorCode::Domain, "inputs must be positive");
  for (const auto& v : y) require(v > 0, ErrorCode::Domain, "inputs must be positive");
  auto form = [](const std::array<Rational, 3>& v) -> Rational {
    return 2 * v[0] * v[1] + 2 * v[0] * v[2] + 2 * v[1] * v[2] - v[0] * v[0] - v[1] * v[1] -
           v[2] * v[2];
  };
  HardLemmaResult out;
  out.quantities.X = form(x);
  out.quantities.Y = form(y);
  out.quantities.Z = x[0] * (y[1] + y[2] - y[0]) + x[1] * (y[0] + y[2] - y[1]) +
                     x[2] * (y[0] + y[1] - y[2]);
  out.applicable = out.quantities.X >= 0 && out.quantities.Y >= 0 && out.quantities.Z >= 0;
  out.lhs = out.quantities.X * out.quantities.Y * out.quantities.Z;
  out.rhs = 32 * x[0] * x[1] * x[2] * y[0] * y[1] * y[2];
  out.holds = !out.applicable || out.lhs < out.rhs;
  return out;
}

RatMatrix witness_triangular(const Rational& eps) {
  require(eps > 0 && eps < 1, ErrorCode::Domain, "epsilon must lie in (0, 1)");
  RatMatrix m(3);
  m.set(0, 0, eps);
  m.set(1, 1, eps);
  m.set(2, 2, 2 / (1 + eps));
  m.set(0, 1, 1);
  m.set(0, 2, 1);
  m.set(1, 2, 1);
  return m;
}

RatMatrix relabel(const RatMatrix& m, const std::vector<int>& sigma) {
  require(static_cast<int>(sigma.size()) == m.size(), ErrorCode::Structural,
          "relabelling has the wrong length");
  RatMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) out.set(sigma[i], sigma[j], m(i, j));
  return out;
}

std::optional<RelabelledMultiple> match_relabelled(const ReducedRatio& r, const ReducedRatio& base) {
  if (r.n != base.n || r.n > kMaxOrbitSize) return std::nullopt;
  Rational rs = 0, bs = 0;
  for (const auto& v : r.coords) rs += v;
  for (const auto& v : base.coords) bs += v;
  if (bs == 0) return std::nullopt;
  Rational factor = rs / bs;
  if (factor <= 0) return std::nullopt;
  std::vector<int> sigma(r.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < r.n && ok; ++i)
      for (int j = i + 1; j < r.n && ok; ++j)
        ok = r.coords[pair_index(r.n, sigma[i], sigma[j])] == factor * base.coords[pair_index(r.n, i, j)];
    if (ok) return RelabelledMultiple{factor, sigma};
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

namespace {

struct Candidate {
  double value = kNegInf;
  std::optional<Rational> exact;
  std::string source;
  RatMatrix matrix;
};

Candidate evaluate_candidate(const FullRatio& r, const RatMatrix& m, std::string source) {
  Candidate c;
  c.source = std::move(source);
  c.matrix = m;
  if (has_integral_exponents(r)) {
    c.exact = evaluate(r, m).value;
    c.value = c.exact->get_d();
  } else {
    c.value = evaluate(r, to_real(m)).value;
  }
  return c;
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.exact && b.exact) return *a.exact > *b.exact;
  return a.value > b.value;
}

std::string decimal_power(int k) { return "1e-" + std::to_string(k); }

Rational inverse_power_of_ten(int k) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return Rational(BigInt(1), den);
}

}  // namespace

SupEstimate estimate_sup(const FullRatio& r, std::uint64_t iterations, std::uint64_t seed,
                         const SamplerConfig& sampler, unsigned threads) {
  validate(r);
  auto cert = is_bounded(reduce(r));
  require(cert.bounded, ErrorCode::Domain, "ratio is unbounded",
          cert.violating_subset ? format_subset(*cert.violating_subset) : std::string());
  require(r.n >= 2, ErrorCode::Domain, "estimation needs n >= 2");

  const bool integral = has_integral_exponents(r);
  SplitRng root(seed);
  std::vector<double> values(iterations);
  std::vector<Rational> exact(integral ? iterations : 0);
  parallel_for(iterations, threads, [&](std::size_t i) {
    SplitRng rng = root.split(i);
    RatMatrix m = sample_rank2(r.n, rng, sampler);
    if (integral) {
      exact[i] = evaluate(r, m).value;
      values[i] = exact[i].get_d();
    } else {
      values[i] = evaluate(r, to_real(m)).value;
    }
  });

  Candidate best;
  if (iterations > 0) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < iterations; ++i)
      if (integral ? exact[i] > exact[arg] : values[i] > values[arg]) arg = i;
    SplitRng rng = root.split(arg);
    best = evaluate_candidate(r, sample_rank2(r.n, rng, sampler), "rank2 sample " + std::to_string(arg));
  }

  auto consider = [&](Candidate c) {
    if (best.source.empty() || better(c, best)) best = std::move(c);
  };
  ReducedRatio reduced = reduce(r);
  if (r.n == 5) {
    auto pent = reduce(named_ratio(RatioKind::Pentagonal, {0, 1, 2, 3, 4}, 5));
    if (auto match = match_relabelled(reduced, pent)) {
      consider(evaluate_candidate(r, relabel(witness_pentagonal(1), match->sigma),
                                  "pentagonal witness t=1"));
      for (int k = 1; k <= 4; ++k)
        consider(evaluate_candidate(r, relabel(witness_pentagonal(inverse_power_of_ten(k)), match->sigma),
                                    "pentagonal witness t=" + decimal_power(k)));
    }
  }
  if (r.n == 3) {
    auto tri = reduce(named_ratio(RatioKind::Triangular, {0, 1, 2}, 3));
    if (auto match = match_relabelled(reduced, tri)) {
      for (int k = 1; k <= 4; ++k)
        consider(evaluate_candidate(r, relabel(witness_triangular(inverse_power_of_ten(k)), match->sigma),
                                    "triangular witness eps=" + decimal_power(k)));
    }
  }
  require(!best.source.empty(), ErrorCode::Domain, "no samples and no witness family apply");

  SupEstimate out;
  out.value = best.value;
  out.exact = best.exact;
  out.argmax = best.matrix;
  out.source = best.source;
  return out;
}

}  // namespace lr
