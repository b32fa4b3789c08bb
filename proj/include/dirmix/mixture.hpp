#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirmix/combinatorics.hpp"
#include "dirmix/distribution.hpp"
#include "dirmix/moment_sequence.hpp"
#include "dirmix/rational.hpp"

// Moments of S_n = sum_i R_i X_i for R ~ Dirichlet(a_1..a_n) independent of
// independent X_i, and exact verifiers for the identities built on them.
namespace dirmix {

class DirichletParams {
 public:
  /// Throws ContractViolation on an empty vector or a nonpositive entry.
  explicit DirichletParams(std::vector<Rational> a);

  /// Dirichlet(1, ..., 1): the law of uniform spacings.
  static DirichletParams flat(std::size_t n);

  const std::vector<Rational>& values() const { return a_; }
  std::size_t size() const { return a_.size(); }
  Rational total() const;

 private:
  std::vector<Rational> a_;
};

/// E(prod_j R_j^{i_j}) = prod_j (a_j)_{i_j} / (sum a)_r.
Rational dirichlet_moment(const DirichletParams& params, const Composition& c);

/// E(S_n^r) for iid X_i ~ spec and flat Dirichlet weights. Sums over
/// partitions of r, weighting each by its number of arrangements.
Rational s_moment(const DistributionSpec& spec, unsigned n, unsigned r);

/// m_0..m_max_order of S_n; the support is that of spec.
MomentSequence s_moments(const DistributionSpec& spec, unsigned n, unsigned max_order);

/// E(<R, X>^r) for independent, not necessarily identical X_i, by the full
/// composition sum.
Rational s_moment_general(std::span<const DistributionSpec> specs, const DirichletParams& params,
                          unsigned r);

MomentSequence s_moments_general(std::span<const DistributionSpec> specs,
                                 const DirichletParams& params, unsigned max_order);

/// Moments of sigma * Y + xi from those of Y. Throws ContractViolation when
/// sigma is zero.
MomentSequence affine_moments(const MomentSequence& seq, const Rational& sigma, const Rational& xi);

struct OrderRange {
  unsigned first = 1;
  unsigned last = 1;
};

struct Counterexample {
  unsigned order = 0;
  Rational lhs;
  Rational rhs;
};

struct VerificationResult {
  std::string claim;
  unsigned n = 0;
  std::map<std::string, std::string> params;
  OrderRange orders;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

inline constexpr unsigned kDefaultMaxOrder = 12;

/// sum over compositions of r of multinomial * prod (1/2)_{i_j} against (n/2)_r.
VerificationResult verify_lemma1(unsigned n, OrderRange orders);

/// sum over compositions of r of multinomial * prod (a_j)_{i_j} against (sum a)_r.
VerificationResult verify_lemma2(const DirichletParams& a, OrderRange orders);

/// S_n moments for iid Arcsin(a) against target moments over orders
/// 0..max_order. The default target is PowerSemicircle((n-1)/2, a); a custom
/// one lets callers run negative controls.
VerificationResult verify_theorem1(unsigned n, unsigned max_order, const Rational& a = 1,
                                   const std::optional<DistributionSpec>& target = std::nullopt);

/// S_n moments for iid GenArcsin(alpha, a) against Beta4(n alpha, n(1-alpha), -a, 2a).
VerificationResult verify_theorem2(unsigned n, const Rational& alpha, unsigned max_order,
                                   const Rational& a = 1);

}  // namespace dirmix
