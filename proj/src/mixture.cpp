#include "dirmix/mixture.hpp"

#include <string>

#include "dirmix/errors.hpp"

namespace dirmix {

DirichletParams::DirichletParams(std::vector<Rational> a) : a_(std::move(a)) {
  if (a_.empty()) throw ContractViolation("Dirichlet parameters must be nonempty");
  for (const auto& v : a_) {
    if (v <= 0) throw ContractViolation("Dirichlet parameter " + v.str() + " is not positive");
  }
}

DirichletParams DirichletParams::flat(std::size_t n) {
  return DirichletParams(std::vector<Rational>(n, Rational(1)));
}

Rational DirichletParams::total() const {
  Rational sum = 0;
  for (const auto& v : a_) sum += v;
  return sum;
}

Rational dirichlet_moment(const DirichletParams& params, const Composition& c) {
  if (c.size() != params.size()) {
    throw ContractViolation("composition length " + std::to_string(c.size()) +
                            " does not match Dirichlet dimension " + std::to_string(params.size()));
  }
  Rational numerator = 1;
  for (std::size_t j = 0; j < c.size(); ++j) numerator *= pochhammer(params.values()[j], c[j]);
  return numerator / pochhammer(params.total(), c.order());
}

Rational s_moment(const DistributionSpec& spec, unsigned n, unsigned r) {
  if (n == 0) throw ContractViolation("s_moment needs n >= 1");
  const MomentSequence x = moments(spec, r);
  const DirichletParams flat = DirichletParams::flat(n);
  Rational sum = 0;
  for_each_partition(r, n, [&](std::span<const unsigned> parts) {
    Rational product = 1;
    for (unsigned p : parts) product *= x[p];
    if (product.is_zero()) return;
    std::vector<unsigned> padded(parts.begin(), parts.end());
    padded.resize(n, 0);
    const Composition c(std::move(padded), r);
    sum += Rational(BigInt(arrangement_count(parts, n) * multinomial(r, c))) * dirichlet_moment(flat, c) *
           product;
  });
  return sum;
}

MomentSequence s_moments(const DistributionSpec& spec, unsigned n, unsigned max_order) {
  std::vector<Rational> m;
  m.reserve(max_order + 1);
  for (unsigned r = 0; r <= max_order; ++r) m.push_back(s_moment(spec, n, r));
  return MomentSequence(support(spec), std::move(m));
}

namespace {

Interval hull(std::span<const DistributionSpec> specs) {
  Interval out = support(specs[0]);
  for (const auto& s : specs.subspan(1)) {
    const Interval i = support(s);
    if (i.lo < out.lo) out.lo = i.lo;
    if (i.hi > out.hi) out.hi = i.hi;
  }
  return out;
}

}  // namespace

Rational s_moment_general(std::span<const DistributionSpec> specs, const DirichletParams& params,
                          unsigned r) {
  if (specs.size() != params.size()) {
    throw ContractViolation("got " + std::to_string(specs.size()) + " distributions for a " +
                            std::to_string(params.size()) + "-dimensional Dirichlet");
  }
  std::vector<MomentSequence> x;
  x.reserve(specs.size());
  for (const auto& s : specs) x.push_back(moments(s, r));

  Rational sum = 0;
  for (const Composition& c : compositions(r, specs.size())) {
    Rational product = 1;
    for (std::size_t j = 0; j < c.size() && !product.is_zero(); ++j) product *= x[j][c[j]];
    if (product.is_zero()) continue;
    sum += Rational(multinomial(r, c)) * dirichlet_moment(params, c) * product;
  }
  return sum;
}

MomentSequence s_moments_general(std::span<const DistributionSpec> specs,
                                 const DirichletParams& params, unsigned max_order) {
  if (specs.empty()) throw ContractViolation("need at least one distribution");
  std::vector<Rational> m;
  m.reserve(max_order + 1);
  for (unsigned r = 0; r <= max_order; ++r) m.push_back(s_moment_general(specs, params, r));
  return MomentSequence(hull(specs), std::move(m));
}

MomentSequence affine_moments(const MomentSequence& seq, const Rational& sigma, const Rational& xi) {
  if (sigma.is_zero()) throw ContractViolation("affine_moments: sigma must be nonzero");
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (unsigned r = 0; r < seq.size(); ++r) {
    Rational sum = 0;
    for (unsigned j = 0; j <= r; ++j) {
      sum += Rational(binomial(r, j)) * pow(sigma, j) * pow(xi, r - j) * seq[j];
    }
    out.push_back(std::move(sum));
  }
  Interval s{sigma * seq.support().lo + xi, sigma * seq.support().hi + xi};
  if (sigma < 0) std::swap(s.lo, s.hi);
  return MomentSequence(std::move(s), std::move(out));
}

namespace {

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].str();
  }
  return out;
}

// LHS of the Dirichlet-multinomial normalization identity.
Rational multinomial_pochhammer_sum(const std::vector<Rational>& a, unsigned r) {
  Rational sum = 0;
  for (const Composition& c : compositions(r, a.size())) {
    Rational term(multinomial(r, c));
    for (std::size_t j = 0; j < c.size(); ++j) term *= pochhammer(a[j], c[j]);
    sum += term;
  }
  return sum;
}

VerificationResult check_identity(VerificationResult result, const std::vector<Rational>& a) {
  Rational total = 0;
  for (const auto& v : a) total += v;
  for (unsigned r = result.orders.first; r <= result.orders.last; ++r) {
    Rational lhs = multinomial_pochhammer_sum(a, r);
    Rational rhs = pochhammer(total, r);
    if (lhs != rhs) {
      result.counterexample = Counterexample{r, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return result;
}

void check_orders(const OrderRange& orders) {
  if (orders.first > orders.last) throw ContractViolation("order range is empty");
}

VerificationResult compare_sequences(VerificationResult result, const DistributionSpec& summand,
                                     const DistributionSpec& target) {
  for (unsigned r = result.orders.first; r <= result.orders.last; ++r) {
    Rational lhs = s_moment(summand, result.n, r);
    Rational rhs = moment(target, r);
    if (lhs != rhs) {
      result.counterexample = Counterexample{r, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return result;
}

}  // namespace

VerificationResult verify_lemma1(unsigned n, OrderRange orders) {
  if (n == 0) throw ContractViolation("lemma1 needs n >= 1");
  check_orders(orders);
  VerificationResult result;
  result.claim = "lemma1";
  result.n = n;
  result.orders = orders;
  return check_identity(std::move(result), std::vector<Rational>(n, Rational(1, 2)));
}

VerificationResult verify_lemma2(const DirichletParams& a, OrderRange orders) {
  check_orders(orders);
  VerificationResult result;
  result.claim = "lemma2";
  result.n = static_cast<unsigned>(a.size());
  result.params["a"] = join(a.values());
  result.orders = orders;
  return check_identity(std::move(result), a.values());
}

VerificationResult verify_theorem1(unsigned n, unsigned max_order, const Rational& a,
                                   const std::optional<DistributionSpec>& target) {
  if (n < 2) throw ContractViolation("theorem1 needs n >= 2");
  const DistributionSpec summand = Arcsin{a};
  const DistributionSpec expected = target.value_or(PowerSemicircle{Rational(n - 1, 2), a});
  VerificationResult result;
  result.claim = "theorem1";
  result.n = n;
  result.params["summand"] = to_string(summand);
  result.params["target"] = to_string(expected);
  result.orders = {0, max_order};
  return compare_sequences(std::move(result), summand, expected);
}

VerificationResult verify_theorem2(unsigned n, const Rational& alpha, unsigned max_order,
                                   const Rational& a) {
  if (n < 2) throw ContractViolation("theorem2 needs n >= 2");
  const DistributionSpec summand = GenArcsin{alpha, a};
  const DistributionSpec expected = Beta4{n * alpha, n * (1 - alpha), -a, 2 * a};
  VerificationResult result;
  result.claim = "theorem2";
  result.n = n;
  result.params["alpha"] = alpha.str();
  result.params["summand"] = to_string(summand);
  result.params["target"] = to_string(expected);
  result.orders = {0, max_order};
  return compare_sequences(std::move(result), summand, expected);
}

}  // namespace dirmix
