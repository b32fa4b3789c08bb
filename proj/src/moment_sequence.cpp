#include "dirmix/moment_sequence.hpp"

#include <algorithm>

#include "dirmix/errors.hpp"

namespace dirmix {

MomentSequence::MomentSequence(Interval support, std::vector<Rational> moments)
    : support_(std::move(support)), moments_(std::move(moments)) {
  if (moments_.empty()) throw ContractViolation("moment sequence must contain m_0");
  if (moments_[0] != 1) throw ContractViolation("moment sequence must have m_0 = 1, got " + moments_[0].str());
  if (support_.lo > support_.hi) throw ContractViolation("support interval has lo > hi");
}

bool MomentSequence::satisfies_support_bound() const {
  const Rational radius = std::max(abs(support_.lo), abs(support_.hi));
  Rational bound = 1;
  for (const auto& m : moments_) {
    if (abs(m) > bound) return false;
    bound *= radius;
  }
  return true;
}

MomentSequence MomentSequence::truncated(std::size_t count) const {
  if (count == 0 || count > moments_.size()) {
    throw ContractViolation("cannot truncate moment sequence to " + std::to_string(count) + " terms");
  }
  return MomentSequence(support_, std::vector<Rational>(moments_.begin(), moments_.begin() + count));
}

}  // namespace dirmix
