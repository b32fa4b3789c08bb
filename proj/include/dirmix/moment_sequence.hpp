#pragma once

#include <cstddef>
#include <vector>

#include "dirmix/rational.hpp"

namespace dirmix {

/// Closed interval [lo, hi] with rational endpoints, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Support interval plus exact raw moments m_0..m_R of a law on it.
class MomentSequence {
 public:
  /// Throws ContractViolation unless moments is nonempty, m_0 = 1 and
  /// lo <= hi.
  MomentSequence(Interval support, std::vector<Rational> moments);

  const Interval& support() const { return support_; }
  const std::vector<Rational>& moments() const { return moments_; }
  const Rational& operator[](std::size_t r) const { return moments_[r]; }
  std::size_t size() const { return moments_.size(); }
  /// Highest order R held.
  unsigned max_order() const { return static_cast<unsigned>(moments_.size() - 1); }

  /// Checks |m_r| <= max(|lo|, |hi|)^r for every stored order. Genuine moment
  /// sequences always pass; recovered or hand-written ones might not.
  bool satisfies_support_bound() const;

  /// First `count` moments; throws ContractViolation if count exceeds size().
  MomentSequence truncated(std::size_t count) const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

 private:
  Interval support_;
  std::vector<Rational> moments_;
};

}  // namespace dirmix
