#include "dirmix/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "dirmix/errors.hpp"
#include "dirmix/mixture.hpp"

namespace dirmix {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double standard_normal(RngStream& rng) {
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Running means of s^1..s^8 over one chunk.
struct ChunkMoments {
  std::size_t count = 0;
  std::array<double, kCheckedMomentOrders + 1> mean{};

  void add(double s) {
    ++count;
    double power = 1.0;
    const double inv = 1.0 / static_cast<double>(count);
    for (unsigned r = 1; r <= kCheckedMomentOrders; ++r) {
      power *= s;
      mean[r] += (power - mean[r]) * inv;
    }
  }

  void merge(const ChunkMoments& other) {
    if (other.count == 0) return;
    const std::size_t total = count + other.count;
    const double w = static_cast<double>(other.count) / static_cast<double>(total);
    for (unsigned r = 1; r <= kCheckedMomentOrders; ++r) mean[r] += (other.mean[r] - mean[r]) * w;
    count = total;
  }
};

void run_chunks(const DistributionSpec& spec, unsigned n, std::size_t samples, std::uint64_t seed,
                const SimulationOptions& options, std::vector<double>& out,
                std::vector<ChunkMoments>* stats) {
  if (n == 0) throw ContractViolation("S_n needs n >= 1");
  if (options.chunk_size == 0) throw ContractViolation("chunk size must be positive");
  const VariateSampler sampler(spec);
  const std::size_t chunks = (samples + options.chunk_size - 1) / options.chunk_size;
  out.assign(samples, 0.0);
  if (stats != nullptr) stats->assign(chunks, ChunkMoments{});

  auto run_chunk = [&](std::size_t c) {
    RngStream rng(seed, c);
    std::vector<double> weights(n);
    std::vector<double> x(n);
    const std::size_t begin = c * options.chunk_size;
    const std::size_t end = std::min(samples, begin + options.chunk_size);
    for (std::size_t i = begin; i < end; ++i) {
      sample_spacings(weights, rng);
      for (auto& v : x) v = sampler(rng);
      // x_n + sum R_i (x_i - x_n): equal to sum R_i x_i, and exactly x_n when
      // all summands coincide.
      double s = x[n - 1];
      for (unsigned j = 0; j + 1 < n; ++j) s += weights[j] * (x[j] - x[n - 1]);
      s = std::clamp(s, sampler.lo(), sampler.hi());
      out[i] = s;
      if (stats != nullptr) (*stats)[c].add(s);
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(chunks, 1)));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
    });
  }
}

}  // namespace

double ks_critical_1pct(std::size_t samples) {
  return kKsCoefficient1Pct / std::sqrt(static_cast<double>(samples));
}

void sample_spacings(std::span<double> out, RngStream& rng) {
  const std::size_t n = out.size();
  if (n == 0) throw ContractViolation("spacings need n >= 1");
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = rng.uniform();
  std::sort(out.begin(), out.end() - 1);
  double previous = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double u = out[i];
    out[i] = u - previous;
    previous = u;
    sum += out[i];
  }
  out[n - 1] = std::max(0.0, 1.0 - sum);
}

std::vector<double> sample_spacings(unsigned n, RngStream& rng) {
  std::vector<double> out(n);
  sample_spacings(out, rng);
  return out;
}

double arcsin_variate(double a, double u) { return -a * std::cos(std::numbers::pi * u); }

double sample_gamma(double shape, RngStream& rng) {
  if (shape < 1.0) {
    const double boost = std::pow(rng.uniform_open(), 1.0 / shape);
    return sample_gamma(shape + 1.0, rng) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double z = standard_normal(rng);
    double v = 1.0 + c * z;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.uniform_open();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(double p, double q, RngStream& rng) {
  if (p <= 1.0 && q <= 1.0) {
    while (true) {
      const double u = rng.uniform_open();
      const double v = rng.uniform_open();
      const double x = std::pow(u, 1.0 / p);
      const double y = std::pow(v, 1.0 / q);
      const double sum = x + y;
      if (sum > 1.0) continue;
      if (sum > 0.0) return x / sum;
      // Both powers underflowed; redo the ratio in log space.
      double log_x = std::log(u) / p;
      double log_y = std::log(v) / q;
      const double log_max = std::max(log_x, log_y);
      log_x -= log_max;
      log_y -= log_max;
      return std::exp(log_x - std::log(std::exp(log_x) + std::exp(log_y)));
    }
  }
  const double g1 = sample_gamma(p, rng);
  const double g2 = sample_gamma(q, rng);
  return g1 / (g1 + g2);
}

VariateSampler::VariateSampler(const DistributionSpec& spec) {
  std::visit(overloaded{
                 [this](const Arcsin& d) {
                   kind_ = Kind::kArcsin;
                   hi_ = d.a.to_double();
                   lo_ = -hi_;
                 },
                 [this](const GenArcsin& d) {
                   kind_ = Kind::kBeta;
                   p_ = d.alpha.to_double();
                   q_ = (1 - d.alpha).to_double();
                   hi_ = d.a.to_double();
                   lo_ = -hi_;
                 },
                 [this](const PowerSemicircle& d) {
                   kind_ = Kind::kBeta;
                   p_ = q_ = (d.lambda + Rational(1, 2)).to_double();
                   hi_ = d.a.to_double();
                   lo_ = -hi_;
                 },
                 [this](const Beta4& d) {
                   kind_ = Kind::kBeta;
                   p_ = d.p.to_double();
                   q_ = d.q.to_double();
                   lo_ = d.loc.to_double();
                   hi_ = (d.loc + d.scale).to_double();
                 },
                 [this](const Uniform& d) {
                   kind_ = Kind::kUniform;
                   lo_ = d.lo.to_double();
                   hi_ = d.hi.to_double();
                 },
                 [this](const PointMass& d) {
                   kind_ = Kind::kPoint;
                   lo_ = hi_ = d.c.to_double();
                 },
             },
             spec.variant());
}

double VariateSampler::operator()(RngStream& rng) const {
  switch (kind_) {
    case Kind::kArcsin:
      return arcsin_variate(hi_, rng.uniform());
    case Kind::kBeta: {
      const double b = sample_beta(p_, q_, rng);
      return std::clamp(lo_ + (hi_ - lo_) * b, lo_, hi_);
    }
    case Kind::kUniform:
      return std::clamp(lo_ + (hi_ - lo_) * rng.uniform(), lo_, hi_);
    case Kind::kPoint:
      return lo_;
  }
  return lo_;
}

double sample_x(const DistributionSpec& spec, RngStream& rng) { return VariateSampler(spec)(rng); }

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw ContractViolation("ks_statistic needs at least one sample");
  const double total = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / total - f, f - static_cast<double>(i) / total});
  }
  return d;
}

std::optional<DistributionSpec> target_law(const DistributionSpec& spec, unsigned n) {
  if (spec.is<Arcsin>()) {
    const auto& d = spec.as<Arcsin>();
    return DistributionSpec(PowerSemicircle{Rational(n - 1, 2), d.a});
  }
  if (spec.is<GenArcsin>()) {
    const auto& d = spec.as<GenArcsin>();
    return DistributionSpec(Beta4{n * d.alpha, n * (1 - d.alpha), -d.a, 2 * d.a});
  }
  return std::nullopt;
}

std::vector<double> sample_s(const DistributionSpec& spec, unsigned n, std::size_t samples,
                             std::uint64_t seed, const SimulationOptions& options) {
  std::vector<double> out;
  run_chunks(spec, n, samples, seed, options, out, nullptr);
  return out;
}

bool MomentCheck::passed() const { return std::fabs(empirical - exact.to_double()) <= tolerance; }

bool SimReport::ks_passed() const { return !ks_statistic || *ks_statistic <= ks_critical_1pct; }

bool SimReport::passed() const {
  return ks_passed() && std::all_of(moments.begin(), moments.end(),
                                    [](const MomentCheck& m) { return m.passed(); });
}

SimReport simulate(const DistributionSpec& spec, unsigned n, std::size_t samples, std::uint64_t seed,
                   const SimulationOptions& options) {
  if (n == 0) throw ContractViolation("simulate needs n >= 1");
  if (samples < 1000) throw ContractViolation("simulate needs at least 1000 samples");

  std::vector<double> values;
  std::vector<ChunkMoments> stats;
  run_chunks(spec, n, samples, seed, options, values, &stats);

  SimReport report{spec, n, samples, seed, target_law(spec, n), std::nullopt, ks_critical_1pct(samples), {}};

  ChunkMoments total;
  for (const auto& c : stats) total.merge(c);

  const MomentSequence exact = s_moments(spec, n, 2 * kCheckedMomentOrders);
  for (unsigned r = 1; r <= kCheckedMomentOrders; ++r) {
    MomentCheck check;
    check.order = r;
    check.exact = exact[r];
    check.empirical = total.mean[r];
    const double variance = (exact[2 * r] - exact[r] * exact[r]).to_double();
    check.standard_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(samples));
    // Allowance for the final rounding of exact vs. floating powers; only
    // matters when the standard error vanishes (point masses).
    const double rounding = 1e-12 * std::max(1.0, std::fabs(check.exact.to_double()));
    check.tolerance = kMomentSigmas * check.standard_error + rounding;
    report.moments.push_back(std::move(check));
  }

  if (report.target) {
    std::sort(values.begin(), values.end());
    const DistributionSpec target = *report.target;
    report.ks_statistic = ks_statistic(values, [&target](double x) { return cdf(target, x); });
  }
  return report;
}

}  // namespace dirmix
