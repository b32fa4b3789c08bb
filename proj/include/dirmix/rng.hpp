#pragma once

#include <cstdint>

namespace dirmix {

/// Counter-based stream: the k-th output is mix64(key + (k + 1) * kGamma),
/// where key = mix64(seed ^ mix64(stream + kGamma)) and mix64 is the
/// SplitMix64 finalizer (Stafford variant 13). Every output depends only on
/// (seed, stream, k), so chunks can be generated in any order.
class RngStream {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t position() const { return counter_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1); safe for logarithms.
  double uniform_open();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace dirmix
