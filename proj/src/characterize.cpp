#include "dirmix/characterize.hpp"

#include <algorithm>
#include <string>

#include "dirmix/combinatorics.hpp"
#include "dirmix/errors.hpp"

namespace dirmix {

MomentSequence recover_x_moments(const MomentSequence& s_seq, unsigned n) {
  if (n < 2) throw ContractViolation("recover_x_moments needs n >= 2");
  std::vector<Rational> x{Rational(1)};
  x.reserve(s_seq.size());
  for (unsigned r = 1; r < s_seq.size(); ++r) {
    // C(n+r-1, r) E(S^r) = n E(X^r) + sum over compositions with every part < r.
    Rational rest = Rational(binomial(n + r - 1, r)) * s_seq[r];
    for (const Composition& c : compositions(r, n)) {
      if (std::find(c.parts().begin(), c.parts().end(), r) != c.parts().end()) continue;
      Rational product = 1;
      for (unsigned part : c.parts()) {
        product *= x[part];
        if (product.is_zero()) break;
      }
      rest -= product;
    }
    x.push_back(rest / n);
  }
  return MomentSequence(s_seq.support(), std::move(x));
}

HausdorffVerdict hausdorff_valid(const MomentSequence& seq, unsigned order) {
  if (seq.support() != Interval{0, 1}) {
    throw ContractViolation("hausdorff_valid expects support [0, 1], got [" + seq.support().lo.str() +
                            ", " + seq.support().hi.str() + "]");
  }
  if (order > seq.max_order()) {
    throw ContractViolation("hausdorff_valid: order " + std::to_string(order) +
                            " exceeds the sequence length");
  }
  HausdorffVerdict verdict;
  verdict.order = order;
  // row[j] holds (-1)^k Delta^k m_j for the current k.
  std::vector<Rational> row(seq.moments().begin(), seq.moments().begin() + order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    for (unsigned j = 0; j + k <= order; ++j) {
      if (row[j] < 0) {
        verdict.valid = false;
        verdict.violation = std::make_pair(j, k);
        return verdict;
      }
    }
    for (unsigned j = 0; j + k < order; ++j) row[j] = row[j] - row[j + 1];
  }
  return verdict;
}

MomentSequence to_unit_interval(const MomentSequence& seq) {
  const Interval& s = seq.support();
  if (s.lo == s.hi) {
    const MomentSequence shifted = affine_moments(seq, 1, -s.lo);
    return MomentSequence(Interval{0, 1}, shifted.moments());
  }
  const Rational sigma = 1 / s.width();
  return affine_moments(seq, sigma, -s.lo * sigma);
}

IdentificationReport identify(const MomentSequence& seq, const std::vector<DistributionSpec>& candidates,
                              unsigned max_order) {
  const unsigned order = std::min(max_order, seq.max_order());
  const MomentSequence target = to_unit_interval(seq.truncated(order + 1));

  IdentificationReport report{seq, order, {}, {}, hausdorff_valid(target, order)};
  for (const auto& candidate : candidates) {
    const MomentSequence mapped = to_unit_interval(moments(candidate, order));
    CandidateOutcome outcome{candidate, std::nullopt};
    for (unsigned r = 0; r <= order; ++r) {
      if (target[r] != mapped[r]) {
        outcome.mismatch = Counterexample{r, target[r], mapped[r]};
        break;
      }
    }
    if (outcome.matched()) report.matches.push_back(candidate);
    report.candidates.push_back(std::move(outcome));
  }
  std::sort(report.matches.begin(), report.matches.end());
  return report;
}

std::vector<DistributionSpec> default_candidate_grid() {
  std::vector<DistributionSpec> grid;
  grid.emplace_back(Arcsin{1});
  for (int k = 1; k <= 11; ++k) grid.emplace_back(GenArcsin{Rational(k, 12), 1});
  for (int k = 0; k <= 6; ++k) grid.emplace_back(PowerSemicircle{Rational(k, 2), 1});
  grid.emplace_back(Uniform{-1, 1});
  return grid;
}

}  // namespace dirmix
