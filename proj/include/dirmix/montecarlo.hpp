#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dirmix/distribution.hpp"
#include "dirmix/rational.hpp"
#include "dirmix/rng.hpp"

namespace dirmix {

/// Seed used by the acceptance runs and as the CLI default.
inline constexpr std::uint64_t kGoldenSeed = 0x5EED2015ULL;

/// KS critical value at the 1% level, asymptotic form 1.628 / sqrt(N).
inline constexpr double kKsCoefficient1Pct = 1.628;
double ks_critical_1pct(std::size_t samples);

/// Empirical moments must land within this many standard errors.
inline constexpr double kMomentSigmas = 5.0;
inline constexpr unsigned kCheckedMomentOrders = 8;

/// Fills out (size n) with the spacings of n - 1 sorted uniforms on [0, 1];
/// the last entry is 1 minus the sum of the others, clamped at 0.
void sample_spacings(std::span<double> out, RngStream& rng);
std::vector<double> sample_spacings(unsigned n, RngStream& rng);

/// -a cos(pi u): maps a uniform u on [0, 1] to Arcsin(a).
double arcsin_variate(double a, double u);

/// Marsaglia-Tsang for shape >= 1, boosted by u^(1/shape) below 1.
double sample_gamma(double shape, RngStream& rng);

/// Joehnk's method when both shapes are <= 1, otherwise a ratio of gammas.
double sample_beta(double p, double q, RngStream& rng);

/// Draws from a catalog spec. Parameters are converted to double once.
class VariateSampler {
 public:
  explicit VariateSampler(const DistributionSpec& spec);
  double operator()(RngStream& rng) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  enum class Kind { kArcsin, kBeta, kUniform, kPoint };
  Kind kind_;
  double p_ = 0.0;
  double q_ = 0.0;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

double sample_x(const DistributionSpec& spec, RngStream& rng);

/// D_N = max_i max(i/N - F(x_i), F(x_i) - (i-1)/N). Throws ContractViolation
/// on empty input.
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);

/// Law of S_n predicted for iid summands: PowerSemicircle((n-1)/2, a) for
/// Arcsin(a), Beta4(n alpha, n(1-alpha), -a, 2a) for GenArcsin(alpha, a),
/// nothing for the other families.
std::optional<DistributionSpec> target_law(const DistributionSpec& spec, unsigned n);

struct SimulationOptions {
  std::size_t chunk_size = std::size_t{1} << 16;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// N realizations of S_n = <R, X> for iid X_i ~ spec, in sample-index order.
/// Chunk c uses RngStream(seed, c), so the result does not depend on the
/// thread count.
std::vector<double> sample_s(const DistributionSpec& spec, unsigned n, std::size_t samples,
                             std::uint64_t seed, const SimulationOptions& options = {});

struct MomentCheck {
  unsigned order = 0;
  Rational exact;
  double empirical = 0.0;
  double standard_error = 0.0;
  double tolerance = 0.0;
  bool passed() const;
};

struct SimReport {
  DistributionSpec spec;
  unsigned n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<DistributionSpec> target;
  std::optional<double> ks_statistic;
  double ks_critical_1pct = 0.0;
  std::vector<MomentCheck> moments;

  bool ks_passed() const;
  bool passed() const;
};

/// Needs n >= 1 and samples >= 1000 (ContractViolation otherwise).
SimReport simulate(const DistributionSpec& spec, unsigned n, std::size_t samples, std::uint64_t seed,
                   const SimulationOptions& options = {});

}  // namespace dirmix
