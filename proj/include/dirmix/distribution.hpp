#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dirmix/moment_sequence.hpp"
#include "dirmix/rational.hpp"

namespace dirmix {

/// Arcsin law on (-a, a): density 1 / (pi sqrt(a^2 - x^2)).
struct Arcsin {
  Rational a;
  friend bool operator==(const Arcsin&, const Arcsin&) = default;
};

/// Beta(alpha, 1 - alpha) mapped affinely onto (-a, a). alpha = 1/2 is the
/// arcsin law.
struct GenArcsin {
  Rational alpha;
  Rational a;
  friend bool operator==(const GenArcsin&, const GenArcsin&) = default;
};

/// Density proportional to (a^2 - x^2)^(lambda - 1/2) on (-a, a).
struct PowerSemicircle {
  Rational lambda;
  Rational a;
  friend bool operator==(const PowerSemicircle&, const PowerSemicircle&) = default;
};

/// loc + scale * B with B ~ Beta(p, q) on (0, 1).
struct Beta4 {
  Rational p;
  Rational q;
  Rational loc = 0;
  Rational scale = 1;
  friend bool operator==(const Beta4&, const Beta4&) = default;
};

struct Uniform {
  Rational lo;
  Rational hi;
  friend bool operator==(const Uniform&, const Uniform&) = default;
};

struct PointMass {
  Rational c;
  friend bool operator==(const PointMass&, const PointMass&) = default;
};

/// One member of the catalog. Parameter constraints are checked on
/// construction (ContractViolation), so every instance has bounded support.
class DistributionSpec {
 public:
  using Variant = std::variant<Arcsin, GenArcsin, PowerSemicircle, Beta4, Uniform, PointMass>;

  DistributionSpec(Arcsin d);            // NOLINT(google-explicit-constructor)
  DistributionSpec(GenArcsin d);         // NOLINT(google-explicit-constructor)
  DistributionSpec(PowerSemicircle d);   // NOLINT(google-explicit-constructor)
  DistributionSpec(Beta4 d);             // NOLINT(google-explicit-constructor)
  DistributionSpec(Uniform d);           // NOLINT(google-explicit-constructor)
  DistributionSpec(PointMass d);         // NOLINT(google-explicit-constructor)

  const Variant& variant() const { return value_; }

  template <typename T>
  bool is() const { return std::holds_alternative<T>(value_); }
  template <typename T>
  const T& as() const { return std::get<T>(value_); }

  /// Symmetric about the midpoint of its support.
  bool is_symmetric() const;

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
  /// Canonical ordering: variant tag first, then parameters in declaration order.
  friend bool operator<(const DistributionSpec& lhs, const DistributionSpec& rhs);

 private:
  Variant value_;
};

Interval support(const DistributionSpec& spec);

/// Exact r-th raw moment E(X^r) on the spec's actual support.
Rational moment(const DistributionSpec& spec, unsigned r);

/// m_0..m_max_order together with the support.
MomentSequence moments(const DistributionSpec& spec, unsigned max_order);

/// Floating-point density. Zero outside the open support; PointMass throws
/// UnsupportedOperation.
double density(const DistributionSpec& spec, double x);

/// Floating-point CDF, exact 0 / 1 at and beyond the support ends.
double cdf(const DistributionSpec& spec, double x);

/// spec is sigma * spec0 + xi in distribution, where spec0 lives on (-1, 1)
/// for the symmetric families and on (0, 1) for the Beta family.
struct Standardized {
  DistributionSpec spec0;
  Rational sigma;
  Rational xi;
};

/// PointMass throws UnsupportedOperation.
Standardized standardize(const DistributionSpec& spec);

/// Parses the command-line syntax: arcsin:a, genarcsin:alpha,a, psc:lambda,a,
/// beta:p,q[,loc,scale], uniform:lo,hi, point:c. Throws ParseError on bad
/// syntax and ContractViolation on out-of-range parameters.
DistributionSpec parse_spec(std::string_view text);

/// Inverse of parse_spec, with rationals written as "p/q".
std::string to_string(const DistributionSpec& spec);

}  // namespace dirmix
