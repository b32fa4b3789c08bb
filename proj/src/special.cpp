#include "dirmix/special.hpp"

#include <cmath>

namespace dirmix::special {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-15;
constexpr int kMaxIterations = 10000;

// Continued fraction for I_x(p,q) evaluated with the modified Lentz method.
double beta_continued_fraction(double p, double q, double x) {
  const double qab = p + q;
  const double qap = p + 1.0;
  const double qam = p - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (q - m) * x / ((qam + m2) * (p + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double log_beta(double p, double q) {
  return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

double incomplete_beta(double p, double q, double x, double one_minus_x) {
  if (!(x > 0.0)) return 0.0;
  if (!(one_minus_x > 0.0)) return 1.0;
  const double log_front = p * std::log(x) + q * std::log(one_minus_x) - log_beta(p, q);
  const double front = std::exp(log_front);
  // The fraction converges fast for x < (p+1)/(p+q+2); otherwise use the
  // reflection I_x(p,q) = 1 - I_{1-x}(q,p).
  if (x < (p + 1.0) / (p + q + 2.0)) {
    return front * beta_continued_fraction(p, q, x) / p;
  }
  return 1.0 - front * beta_continued_fraction(q, p, one_minus_x) / q;
}

}  // namespace dirmix::special
