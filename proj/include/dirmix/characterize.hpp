#pragma once

#include <optional>
#include <vector>

#include "dirmix/distribution.hpp"
#include "dirmix/mixture.hpp"
#include "dirmix/moment_sequence.hpp"

namespace dirmix {

/// Recovers the moments of the common summand law from those of S_n (flat
/// Dirichlet weights). Needs n >= 2; the result keeps the input's support
/// and length.
MomentSequence recover_x_moments(const MomentSequence& s_seq, unsigned n);

struct HausdorffVerdict {
  bool valid = true;
  unsigned order = 0;
  /// First (j, k) with (-1)^k Delta^k m_j < 0, scanning k then j upward.
  std::optional<std::pair<unsigned, unsigned>> violation;
};

/// Complete-monotonicity check for a sequence on [0, 1] through j + k <=
/// order. Throws ContractViolation if the support is not [0, 1] or the
/// sequence is shorter than order + 1.
HausdorffVerdict hausdorff_valid(const MomentSequence& seq, unsigned order);

/// Affine image of seq on [0, 1]. A degenerate support [c, c] is shifted to
/// the origin and reported on [0, 1].
MomentSequence to_unit_interval(const MomentSequence& seq);

struct CandidateOutcome {
  DistributionSpec spec;
  /// First order where the standardized moments differ, if any.
  std::optional<Counterexample> mismatch;
  bool matched() const { return !mismatch.has_value(); }
};

struct IdentificationReport {
  MomentSequence recovered;
  unsigned checked_order = 0;
  std::vector<CandidateOutcome> candidates;
  /// Candidates agreeing at every checked order, in canonical spec order.
  std::vector<DistributionSpec> matches;
  HausdorffVerdict validity;
};

/// Compares seq with each candidate after mapping both onto [0, 1]; the
/// comparison is exact and runs through min(max_order, seq.max_order()).
IdentificationReport identify(const MomentSequence& seq, const std::vector<DistributionSpec>& candidates,
                              unsigned max_order = kDefaultMaxOrder);

/// Arcsin(1), GenArcsin(k/12, 1) for k = 1..11, PowerSemicircle(k/2, 1) for
/// k = 0..6 and Uniform(-1, 1).
std::vector<DistributionSpec> default_candidate_grid();

}  // namespace dirmix
