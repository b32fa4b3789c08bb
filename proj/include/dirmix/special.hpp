#pragma once

namespace dirmix::special {

/// log B(p, q) via lgamma.
double log_beta(double p, double q);

/// Regularized incomplete beta I_x(p, q). Takes both x and 1 - x so callers
/// near the upper end can pass an exactly computed complement.
double incomplete_beta(double p, double q, double x, double one_minus_x);

inline double incomplete_beta(double p, double q, double x) {
  return incomplete_beta(p, q, x, 1.0 - x);
}

}  // namespace dirmix::special
