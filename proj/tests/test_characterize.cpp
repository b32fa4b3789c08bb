#include <doctest.h>

#include <algorithm>

#include "dirmix/characterize.hpp"
#include "dirmix/errors.hpp"

using namespace dirmix;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

std::vector<DistributionSpec> catalog() {
  return {Arcsin{1},          Arcsin{q("5/2")},     GenArcsin{q("1/6"), 1},        GenArcsin{q("3/4"), 2},
          PowerSemicircle{0, 1}, PowerSemicircle{q("3/2"), q("1/2")}, Beta4{2, 3, -1, 3},
          Beta4{q("1/3"), q("5/2"), q("1/2"), 1}, Uniform{-1, 2}, PointMass{q("2/9")}};
}

bool contains(const std::vector<DistributionSpec>& v, const DistributionSpec& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("recover_x_moments examples") {
  const MomentSequence uniform = moments(Uniform{0, 1}, 6);
  const MomentSequence x = recover_x_moments(uniform, 2);
  CHECK(x[1] == Rational(1, 2));
  CHECK(x[2] == Rational(3, 8));
  // Hand recursion: 3 (1/3) = 2 m_2 + (1/2)^2.
  CHECK(3 * uniform[2] == 2 * x[2] + x[1] * x[1]);
  CHECK(x == moments(Beta4{q("1/2"), q("1/2"), 0, 1}, 6));
  CHECK(x.support() == uniform.support());
  CHECK(x.size() == uniform.size());

  for (unsigned n = 2; n <= 6; ++n) {
    const auto s = moments(Beta4{2, 7, -3, 5}, 3);
    CHECK(recover_x_moments(s, n)[1] == s[1]);
  }
  CHECK_THROWS_AS(recover_x_moments(uniform, 1), ContractViolation);
}

TEST_CASE("recovery inverts the forward engine") {
  for (const auto& spec : catalog()) {
    for (unsigned n = 2; n <= 4; ++n) {
      CAPTURE(to_string(spec));
      CAPTURE(n);
      CHECK(recover_x_moments(s_moments(spec, n, 12), n) == moments(spec, 12));
    }
  }
}

TEST_CASE("Beta targets recover generalized arcsin summands") {
  for (unsigned n = 2; n <= 4; ++n) {
    for (const char* alpha_text : {"1/6", "1/4", "1/3", "1/2", "3/4"}) {
      const Rational alpha = q(alpha_text);
      const MomentSequence s = moments(Beta4{n * alpha, n * (1 - alpha), -1, 2}, 12);
      const MomentSequence x = recover_x_moments(s, n);
      CAPTURE(n);
      CAPTURE(alpha_text);
      CHECK(x == moments(GenArcsin{alpha, 1}, 12));
      CHECK(hausdorff_valid(to_unit_interval(x), 12).valid);
      const auto report = identify(x, default_candidate_grid(), 12);
      CHECK(contains(report.matches, GenArcsin{alpha, 1}));
    }
  }
}

TEST_CASE("hausdorff_valid") {
  const auto arcsine01 = moments(Beta4{q("1/2"), q("1/2"), 0, 1}, 12);
  const auto ok = hausdorff_valid(arcsine01, 12);
  CHECK(ok.valid);
  CHECK_FALSE(ok.violation.has_value());

  const MomentSequence bad(Interval{0, 1}, {1, q("1/2"), q("3/5")});
  const auto verdict = hausdorff_valid(bad, 2);
  CHECK_FALSE(verdict.valid);
  REQUIRE(verdict.violation.has_value());
  CHECK(verdict.violation->first == 1);
  CHECK(verdict.violation->second == 1);

  const MomentSequence at_one(Interval{0, 1}, std::vector<Rational>(13, Rational(1)));
  CHECK(hausdorff_valid(at_one, 12).valid);

  CHECK_THROWS_AS(hausdorff_valid(moments(Arcsin{1}, 4), 4), ContractViolation);
  CHECK_THROWS_AS(hausdorff_valid(arcsine01, 13), ContractViolation);

  // Negative m_1 is caught at k = 0.
  const MomentSequence negative(Interval{0, 1}, {1, q("-1/10"), q("1/10")});
  CHECK(hausdorff_valid(negative, 2).violation == std::make_pair(1u, 0u));

  for (const auto& spec : catalog()) {
    for (unsigned n = 2; n <= 4; ++n) {
      const auto recovered = recover_x_moments(s_moments(spec, n, 12), n);
      CHECK(hausdorff_valid(to_unit_interval(recovered), 12).valid);
      CHECK(recovered.satisfies_support_bound());
    }
  }
}

TEST_CASE("identify") {
  const auto arcsine01 = moments(Beta4{q("1/2"), q("1/2"), 0, 1}, 12);
  const auto report = identify(arcsine01, default_candidate_grid(), 12);
  CHECK(report.validity.valid);
  CHECK(report.checked_order == 12);
  CHECK(report.candidates.size() == default_candidate_grid().size());
  const std::vector<DistributionSpec> expected{Arcsin{1}, GenArcsin{q("1/2"), 1}, PowerSemicircle{0, 1}};
  CHECK(report.matches == expected);

  for (unsigned n = 2; n <= 6; ++n) {
    const auto psc = moments(PowerSemicircle{Rational(n - 1, 2), 1}, 12);
    const std::vector<DistributionSpec> candidates{Beta4{Rational(n, 2), Rational(n, 2), -1, 2},
                                                   Beta4{Rational(n + 1, 2), Rational(n + 1, 2), -1, 2},
                                                   Beta4{Rational(n, 2), Rational(n + 2, 2), -1, 2}};
    const auto r = identify(psc, candidates, 12);
    CHECK(r.matches == std::vector<DistributionSpec>{candidates[0]});
  }

  std::vector<Rational> perturbed = arcsine01.moments();
  perturbed[2] += Rational(1, 1000);
  const auto miss = identify(MomentSequence(arcsine01.support(), perturbed), default_candidate_grid(), 12);
  CHECK(miss.matches.empty());
  for (const auto& c : miss.candidates) {
    REQUIRE(c.mismatch.has_value());
    CHECK(c.mismatch->order <= 2);
  }

  // Checking fewer orders never loses a match.
  const auto x = moments(GenArcsin{q("1/3"), 1}, 12);
  const auto full = identify(x, default_candidate_grid(), 12);
  for (unsigned order = 0; order < 12; ++order) {
    const auto partial = identify(x, default_candidate_grid(), order);
    for (const auto& m : full.matches) CHECK(contains(partial.matches, m));
  }

  // Orders beyond the available moments are clamped.
  CHECK(identify(moments(Arcsin{1}, 4), default_candidate_grid(), 12).checked_order == 4);

  // Degenerate support: only point masses can match.
  const auto point = identify(moments(PointMass{3}, 6), {PointMass{3}, PointMass{-1}, Arcsin{1}}, 6);
  CHECK(point.validity.valid);
  CHECK(point.matches.size() == 2);
}

TEST_CASE("default candidate grid") {
  const auto grid = default_candidate_grid();
  CHECK(grid.size() == 1 + 11 + 7 + 1);
  CHECK(contains(grid, GenArcsin{q("1/12"), 1}));
  CHECK(contains(grid, GenArcsin{q("11/12"), 1}));
  CHECK(contains(grid, PowerSemicircle{3, 1}));
}
