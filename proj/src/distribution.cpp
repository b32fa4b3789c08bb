#include "dirmix/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "dirmix/combinatorics.hpp"
#include "dirmix/errors.hpp"
#include "dirmix/special.hpp"

namespace dirmix {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ContractViolation(message);
}

const Rational kHalf(1, 2);

std::vector<Rational> parameters(const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [](const Arcsin& d) { return std::vector<Rational>{d.a}; },
                        [](const GenArcsin& d) { return std::vector<Rational>{d.alpha, d.a}; },
                        [](const PowerSemicircle& d) { return std::vector<Rational>{d.lambda, d.a}; },
                        [](const Beta4& d) { return std::vector<Rational>{d.p, d.q, d.loc, d.scale}; },
                        [](const Uniform& d) { return std::vector<Rational>{d.lo, d.hi}; },
                        [](const PointMass& d) { return std::vector<Rational>{d.c}; },
                    },
                    spec.variant());
}

// E((loc + scale B)^r) for B ~ Beta(p, q), by binomial expansion over the
// standard Beta moments (p)_j / (p+q)_j.
Rational beta_moment(const Rational& p, const Rational& q, const Rational& loc,
                     const Rational& scale, unsigned r) {
  const Rational total = p + q;
  Rational sum = 0;
  Rational standard = 1;  // (p)_j / (p+q)_j
  Rational scale_pow = 1;
  for (unsigned j = 0; j <= r; ++j) {
    if (j > 0) {
      standard *= (p + (j - 1)) / (total + (j - 1));
      scale_pow *= scale;
    }
    if (loc.is_zero() && j < r) continue;
    sum += Rational(binomial(r, j)) * pow(loc, r - j) * scale_pow * standard;
  }
  return sum;
}

// Beta(p, q) density at u with complement v = 1 - u.
double beta_density(double p, double q, double u, double v) {
  if (!(u > 0.0) || !(v > 0.0)) return 0.0;
  return std::exp((p - 1.0) * std::log(u) + (q - 1.0) * std::log(v) - special::log_beta(p, q));
}

}  // namespace

DistributionSpec::DistributionSpec(Arcsin d) : value_(std::move(d)) {
  require(as<Arcsin>().a > 0, "arcsin: a must be > 0");
}

DistributionSpec::DistributionSpec(GenArcsin d) : value_(std::move(d)) {
  const auto& g = as<GenArcsin>();
  require(g.alpha > 0 && g.alpha < 1, "genarcsin: alpha must lie in (0, 1)");
  require(g.a > 0, "genarcsin: a must be > 0");
}

DistributionSpec::DistributionSpec(PowerSemicircle d) : value_(std::move(d)) {
  const auto& s = as<PowerSemicircle>();
  require(s.lambda > -kHalf, "psc: lambda must be > -1/2");
  require(s.a > 0, "psc: a must be > 0");
}

DistributionSpec::DistributionSpec(Beta4 d) : value_(std::move(d)) {
  const auto& b = as<Beta4>();
  require(b.p > 0 && b.q > 0, "beta: shapes p and q must be > 0");
  require(b.scale > 0, "beta: scale must be > 0");
}

DistributionSpec::DistributionSpec(Uniform d) : value_(std::move(d)) {
  require(as<Uniform>().lo < as<Uniform>().hi, "uniform: lo must be < hi");
}

DistributionSpec::DistributionSpec(PointMass d) : value_(std::move(d)) {}

bool DistributionSpec::is_symmetric() const {
  return std::visit(overloaded{
                        [](const GenArcsin& d) { return d.alpha == kHalf; },
                        [](const Beta4& d) { return d.p == d.q; },
                        [](const auto&) { return true; },
                    },
                    value_);
}

bool operator<(const DistributionSpec& lhs, const DistributionSpec& rhs) {
  if (lhs.value_.index() != rhs.value_.index()) return lhs.value_.index() < rhs.value_.index();
  const auto a = parameters(lhs);
  const auto b = parameters(rhs);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Interval support(const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [](const Arcsin& d) { return Interval{-d.a, d.a}; },
                        [](const GenArcsin& d) { return Interval{-d.a, d.a}; },
                        [](const PowerSemicircle& d) { return Interval{-d.a, d.a}; },
                        [](const Beta4& d) { return Interval{d.loc, d.loc + d.scale}; },
                        [](const Uniform& d) { return Interval{d.lo, d.hi}; },
                        [](const PointMass& d) { return Interval{d.c, d.c}; },
                    },
                    spec.variant());
}

Rational moment(const DistributionSpec& spec, unsigned r) {
  return std::visit(
      overloaded{
          // Even moments (1/2)_k / k! a^{2k}, i.e. C(2k,k)/4^k a^{2k}.
          [r](const Arcsin& d) -> Rational {
            if (r % 2 == 1) return 0;
            const unsigned k = r / 2;
            return pochhammer(kHalf, k) / Rational(factorial(k)) * pow(d.a, r);
          },
          [r](const GenArcsin& d) -> Rational {
            return beta_moment(d.alpha, 1 - d.alpha, -d.a, 2 * d.a, r);
          },
          // Even moments Gamma(k+1/2) Gamma(lambda+1) / (sqrt(pi) Gamma(k+lambda+1)) a^{2k}
          // = (1/2)_k / (lambda+1)_k a^{2k}.
          [r](const PowerSemicircle& d) -> Rational {
            if (r % 2 == 1) return 0;
            const unsigned k = r / 2;
            return pochhammer(kHalf, k) / pochhammer(d.lambda + 1, k) * pow(d.a, r);
          },
          [r](const Beta4& d) -> Rational { return beta_moment(d.p, d.q, d.loc, d.scale, r); },
          [r](const Uniform& d) -> Rational {
            return (pow(d.hi, r + 1) - pow(d.lo, r + 1)) / (Rational(r + 1) * (d.hi - d.lo));
          },
          [r](const PointMass& d) -> Rational { return pow(d.c, r); },
      },
      spec.variant());
}

MomentSequence moments(const DistributionSpec& spec, unsigned max_order) {
  std::vector<Rational> m;
  m.reserve(max_order + 1);
  for (unsigned r = 0; r <= max_order; ++r) m.push_back(moment(spec, r));
  return MomentSequence(support(spec), std::move(m));
}

double density(const DistributionSpec& spec, double x) {
  return std::visit(
      overloaded{
          [x](const Arcsin& d) {
            const double a = d.a.to_double();
            if (!(x > -a && x < a)) return 0.0;
            return 1.0 / (std::numbers::pi * std::sqrt((a - x) * (a + x)));
          },
          [x](const GenArcsin& d) {
            const double a = d.a.to_double();
            const double alpha = d.alpha.to_double();
            return beta_density(alpha, 1.0 - alpha, (x + a) / (2 * a), (a - x) / (2 * a)) / (2 * a);
          },
          [x](const PowerSemicircle& d) {
            const double a = d.a.to_double();
            if (!(x > -a && x < a)) return 0.0;
            const double lambda = d.lambda.to_double();
            const double log_norm = std::lgamma(lambda + 1.0) - 0.5 * std::log(std::numbers::pi) -
                                    std::lgamma(lambda + 0.5) - 2.0 * lambda * std::log(a);
            return std::exp(log_norm + (lambda - 0.5) * std::log((a - x) * (a + x)));
          },
          [x](const Beta4& d) {
            const double loc = d.loc.to_double();
            const double scale = d.scale.to_double();
            const double hi = (d.loc + d.scale).to_double();
            return beta_density(d.p.to_double(), d.q.to_double(), (x - loc) / scale, (hi - x) / scale) /
                   scale;
          },
          [x](const Uniform& d) {
            const double lo = d.lo.to_double();
            const double hi = d.hi.to_double();
            if (!(x > lo && x < hi)) return 0.0;
            return 1.0 / (d.hi - d.lo).to_double();
          },
          [](const PointMass&) -> double {
            throw UnsupportedOperation("density is undefined for a point mass");
          },
      },
      spec.variant());
}

double cdf(const DistributionSpec& spec, double x) {
  return std::visit(
      overloaded{
          [x](const Arcsin& d) {
            const double a = d.a.to_double();
            if (x <= -a) return 0.0;
            if (x >= a) return 1.0;
            return std::clamp(0.5 + std::asin(x / a) / std::numbers::pi, 0.0, 1.0);
          },
          [x](const GenArcsin& d) {
            const double a = d.a.to_double();
            if (x <= -a) return 0.0;
            if (x >= a) return 1.0;
            const double alpha = d.alpha.to_double();
            return special::incomplete_beta(alpha, 1.0 - alpha, (x + a) / (2 * a), (a - x) / (2 * a));
          },
          [x](const PowerSemicircle& d) {
            const double a = d.a.to_double();
            if (x <= -a) return 0.0;
            if (x >= a) return 1.0;
            const double shape = d.lambda.to_double() + 0.5;
            return special::incomplete_beta(shape, shape, (x + a) / (2 * a), (a - x) / (2 * a));
          },
          [x](const Beta4& d) {
            const double loc = d.loc.to_double();
            const double hi = (d.loc + d.scale).to_double();
            if (x <= loc) return 0.0;
            if (x >= hi) return 1.0;
            const double scale = d.scale.to_double();
            return special::incomplete_beta(d.p.to_double(), d.q.to_double(), (x - loc) / scale,
                                            (hi - x) / scale);
          },
          [x](const Uniform& d) {
            const double lo = d.lo.to_double();
            const double hi = d.hi.to_double();
            if (x <= lo) return 0.0;
            if (x >= hi) return 1.0;
            return (x - lo) / (hi - lo);
          },
          [x](const PointMass& d) { return x >= d.c.to_double() ? 1.0 : 0.0; },
      },
      spec.variant());
}

Standardized standardize(const DistributionSpec& spec) {
  return std::visit(
      overloaded{
          [](const Arcsin& d) { return Standardized{Arcsin{1}, d.a, 0}; },
          [](const GenArcsin& d) {
            return Standardized{Beta4{d.alpha, 1 - d.alpha, 0, 1}, 2 * d.a, -d.a};
          },
          [](const PowerSemicircle& d) { return Standardized{PowerSemicircle{d.lambda, 1}, d.a, 0}; },
          [](const Beta4& d) { return Standardized{Beta4{d.p, d.q, 0, 1}, d.scale, d.loc}; },
          [](const Uniform& d) {
            return Standardized{Uniform{-1, 1}, (d.hi - d.lo) / 2, (d.hi + d.lo) / 2};
          },
          [](const PointMass&) -> Standardized {
            throw UnsupportedOperation("a point mass has no standard form");
          },
      },
      spec.variant());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<Rational> parse_args(std::string_view text, std::string_view whole) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    const auto piece = trim(text.substr(0, comma));
    if (piece.empty()) throw ParseError("empty parameter in spec '" + std::string(whole) + "'");
    out.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void expect_arity(const std::vector<Rational>& args, std::size_t lo, std::size_t hi,
                  std::string_view whole) {
  if (args.size() < lo || args.size() > hi) {
    throw ParseError("wrong number of parameters in spec '" + std::string(whole) + "'");
  }
}

}  // namespace

DistributionSpec parse_spec(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("distribution spec '" + std::string(whole) + "' is missing ':' (e.g. arcsin:1)");
  }
  const std::string_view name = trim(text.substr(0, colon));
  const auto args = parse_args(text.substr(colon + 1), whole);
  if (name == "arcsin") {
    expect_arity(args, 1, 1, whole);
    return Arcsin{args[0]};
  }
  if (name == "genarcsin") {
    expect_arity(args, 2, 2, whole);
    return GenArcsin{args[0], args[1]};
  }
  if (name == "psc") {
    expect_arity(args, 2, 2, whole);
    return PowerSemicircle{args[0], args[1]};
  }
  if (name == "beta") {
    if (args.size() != 2 && args.size() != 4) {
      throw ParseError("beta takes p,q or p,q,loc,scale in '" + std::string(whole) + "'");
    }
    if (args.size() == 2) return Beta4{args[0], args[1], 0, 1};
    return Beta4{args[0], args[1], args[2], args[3]};
  }
  if (name == "uniform") {
    expect_arity(args, 2, 2, whole);
    return Uniform{args[0], args[1]};
  }
  if (name == "point") {
    expect_arity(args, 1, 1, whole);
    return PointMass{args[0]};
  }
  throw ParseError("unknown distribution '" + std::string(name) + "' in spec '" + std::string(whole) + "'");
}

std::string to_string(const DistributionSpec& spec) {
  static constexpr const char* kNames[] = {"arcsin", "genarcsin", "psc", "beta", "uniform", "point"};
  std::string out = kNames[spec.variant().index()];
  out += ':';
  const auto params = parameters(spec);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += params[i].str();
  }
  return out;
}

}  // namespace dirmix
