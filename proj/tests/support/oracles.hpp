#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "dirmix/distribution.hpp"
#include "dirmix/rational.hpp"

namespace dirmix::oracle {

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return BigInt(factorial(n) / (factorial(k) * factorial(n - k)));
}

inline BigInt multinomial(const std::vector<unsigned>& parts) {
  unsigned r = 0;
  BigInt denominator = 1;
  for (unsigned p : parts) {
    r += p;
    denominator *= factorial(p);
  }
  return BigInt(factorial(r) / denominator);
}

inline Rational rising(const Rational& x, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= x + Rational(static_cast<long>(i));
  return out;
}

/// Every n-tuple over {0..r} whose entries sum to r, by exhaustive search.
inline std::set<std::vector<unsigned>> brute_compositions(unsigned r, unsigned n) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> t(n, 0);
  while (true) {
    unsigned s = 0;
    for (unsigned v : t) s += v;
    if (s == r) out.insert(t);
    std::size_t i = 0;
    while (i < n && t[i] == r) t[i++] = 0;
    if (i == n) break;
    ++t[i];
  }
  return out;
}

/// Catalan number C_k.
inline BigInt catalan(unsigned k) { return BigInt(binomial(2 * k, k) / (k + 1)); }

/// E(S_2^r) for independent X_1, X_2 with raw moments m1, m2 and R ~ U(0,1):
/// sum_j C(r,j) B(j+1, r-j+1) m1_j m2_{r-j}, with the Beta integral
/// B(j+1, r-j+1) = j! (r-j)! / (r+1)!.
inline Rational two_summand_moment(const std::vector<Rational>& m1, const std::vector<Rational>& m2,
                                   unsigned r) {
  Rational sum = 0;
  for (unsigned j = 0; j <= r; ++j) {
    const Rational beta_integral(BigInt(factorial(j) * factorial(r - j)), factorial(r + 1));
    sum += Rational(binomial(r, j)) * beta_integral * m1[j] * m2[r - j];
  }
  return sum;
}

/// 20-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration.
struct GaussLegendre {
  static constexpr int kPoints = 20;
  std::vector<double> nodes, weights;

  GaussLegendre() : nodes(kPoints), weights(kPoints) {
    const int n = kPoints;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
        }
        dp = n * (z * p1 - p2) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::fabs(dz) < 1e-16) break;
      }
      nodes[i] = -z;
      nodes[n - 1 - i] = z;
      weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }

  double integrate(const std::function<double(double)>& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < kPoints; ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return sum * half;
  }

  /// Composite rule on [0, S] with panels graded geometrically toward 0.
  double integrate_graded(const std::function<double(double)>& f, double length) const {
    double sum = 0.0;
    double right = length;
    for (int level = 0; level < 60; ++level) {
      const double left = right * 0.5;
      sum += integrate(f, left, right);
      right = left;
    }
    return sum + integrate(f, 0.0, right);
  }
};

/// Integral of g(x) f(x) where f behaves like (x - end)^(shape - 1) at one
/// endpoint. Substituting t = s^(1/shape) removes the singularity; the
/// Jacobian is formed from the exactly representable offset actually used.
class DensityQuadrature {
 public:
  using Fn = std::function<double(double)>;

  /// Integral over [end, other] (toward_upper = false, singular at the lower
  /// end) or [other, end] (toward_upper = true, singular at the upper end).
  double one_sided(const Fn& f, double end, double other, double shape) const {
    const double length = std::fabs(other - end);
    const double direction = other > end ? 1.0 : -1.0;
    const double p = std::min(shape, 1.0);
    auto h = [&](double s) {
      const double t = std::pow(s, 1.0 / p);
      double x = end + direction * t;
      if (x == end) x = std::nextafter(end, other);
      const double used = std::fabs(x - end);
      return f(x) * std::pow(used, 1.0 - p) / p;
    };
    return gl_.integrate_graded(h, std::pow(length, p));
  }

  /// Integral of g * density over the full support [lo, hi] with endpoint
  /// shapes p_lo, p_hi.
  double full(const Fn& f, double lo, double hi, double p_lo, double p_hi) const {
    const double mid = 0.5 * (lo + hi);
    return one_sided(f, lo, mid, p_lo) + one_sided(f, hi, mid, p_hi);
  }

 private:
  GaussLegendre gl_;
};

/// Endpoint shapes (exponent + 1) of the catalog densities.
inline std::pair<double, double> endpoint_shapes(const DistributionSpec& spec) {
  if (spec.is<Arcsin>()) return {0.5, 0.5};
  if (spec.is<GenArcsin>()) {
    const double a = spec.as<GenArcsin>().alpha.to_double();
    return {a, 1.0 - a};
  }
  if (spec.is<PowerSemicircle>()) {
    const double s = spec.as<PowerSemicircle>().lambda.to_double() + 0.5;
    return {s, s};
  }
  if (spec.is<Beta4>()) return {spec.as<Beta4>().p.to_double(), spec.as<Beta4>().q.to_double()};
  return {1.0, 1.0};
}

inline Rational random_rational(std::mt19937_64& gen, long max_num, long max_den, bool allow_negative) {
  std::uniform_int_distribution<long> num(allow_negative ? -max_num : 0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(BigInt(num(gen)), BigInt(den(gen)));
}

/// Law of sigma * X + xi, written in the catalog.
inline DistributionSpec affine_image(const DistributionSpec& spec, const Rational& sigma, const Rational& xi) {
  if (spec.is<PointMass>()) return PointMass{sigma * spec.as<PointMass>().c + xi};
  if (spec.is<Uniform>()) {
    const auto& u = spec.as<Uniform>();
    Rational lo = sigma * u.lo + xi, hi = sigma * u.hi + xi;
    if (sigma < 0) std::swap(lo, hi);
    return Uniform{lo, hi};
  }
  // Every other family is a Beta law on its support.
  Rational p, qq;
  if (spec.is<Arcsin>()) {
    p = qq = Rational(1, 2);
  } else if (spec.is<GenArcsin>()) {
    p = spec.as<GenArcsin>().alpha;
    qq = 1 - p;
  } else if (spec.is<PowerSemicircle>()) {
    p = qq = spec.as<PowerSemicircle>().lambda + Rational(1, 2);
  } else {
    p = spec.as<Beta4>().p;
    qq = spec.as<Beta4>().q;
  }
  const Interval s = support(spec);
  if (sigma > 0) return Beta4{p, qq, sigma * s.lo + xi, sigma * s.width()};
  return Beta4{qq, p, sigma * s.hi + xi, -sigma * s.width()};
}

}  // namespace dirmix::oracle
