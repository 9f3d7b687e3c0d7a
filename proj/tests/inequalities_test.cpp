// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bellcat/error.hpp"
#include "bellcat/inequalities.hpp"
#include "test_support.hpp"

namespace bellcat {
namespace {

using testing::random_coefficients;
using testing::random_direction;

Direction equator(double phi) { return {0.5 * kPi, phi}; }

TEST(BellCheck, SingletViolatesAtOrthogonalSettings) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  const InequalityReport r = bell_check(p, equator(-0.25 * kPi), equator(0.0), equator(0.5 * kPi));
  EXPECT_NEAR(r.lhs, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(r.rhs, 1.0, 1e-12);
  EXPECT_NEAR(r.margin, 1.0 - std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(r.violated);
  EXPECT_EQ(r.kind, InequalityKind::bell);
  ASSERT_EQ(r.config.size(), 3u);
}

TEST(BellCheck, SpinOneSingletNeverViolated) {
  std::mt19937_64 rng(81);
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(2)));
  for (int i = 0; i < 10000; ++i) {
    const InequalityReport r = bell_check(p, random_direction(rng), random_direction(rng), random_direction(rng));
    ASSERT_FALSE(r.violated) << r.margin;
  }
}

TEST(ChshCheck, TsirelsonConfiguration) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  const InequalityReport r =
      chsh_check(p, equator(0.0), equator(0.25 * kPi), equator(-0.25 * kPi), equator(0.5 * kPi));
  EXPECT_NEAR(r.lhs, 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(r.rhs, 2.0);
  EXPECT_TRUE(r.violated);
  EXPECT_NEAR(objective(r), 2.0 * std::sqrt(2.0), 1e-12);
}

TEST(LcProviders, NeverViolateBellChshQuadratic) {
  std::mt19937_64 rng(83);
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const CorrelationProvider p = lc_provider({SpinQuantum(two_s), random_coefficients(rng)});
    EXPECT_EQ(p.provenance, Provenance::lc_only);
    for (int i = 0; i < 10000; ++i) {
      const Direction a = random_direction(rng);
      const Direction b = random_direction(rng);
      const Direction c = random_direction(rng);
      const Direction d = random_direction(rng);
      ASSERT_FALSE(bell_check(p, a, b, c).violated);
      ASSERT_FALSE(chsh_check(p, a, b, c, d).violated);
      ASSERT_FALSE(quadratic_check(p, a, b, c).violated);
    }
  }
}

TEST(IntegerSpin, FullStatesNeverViolateBellOrChsh) {
  std::mt19937_64 rng(85);
  for (int two_s : {2, 4, 6}) {
    for (int k = 0; k < 5; ++k) {
      const CorrelationProvider p = full_provider({SpinQuantum(two_s), random_coefficients(rng)});
      for (int i = 0; i < 1000; ++i) {
        const Direction a = random_direction(rng);
        const Direction b = random_direction(rng);
        const Direction c = random_direction(rng);
        ASSERT_FALSE(bell_check(p, a, b, c).violated);
        ASSERT_FALSE(chsh_check(p, a, b, c, random_direction(rng)).violated);
      }
    }
  }
}

TEST(WignerCheck, SpinHalfLocalNeverViolated) {
  std::mt19937_64 rng(87);
  const CorrelationProvider p = lc_provider(singlet(SpinQuantum(1)));
  for (int i = 0; i < 10000; ++i) {
    const InequalityReport r = wigner_check(p, random_direction(rng), random_direction(rng), random_direction(rng));
    ASSERT_FALSE(r.violated) << r.margin;
  }
}

TEST(WignerCheck, SpinOneLocalViolated) {
  const CorrelationProvider p = lc_provider(singlet(SpinQuantum(2)));
  const InequalityReport r = wigner_check(p, equator(0.0), Direction::z_axis(), Direction(kPi, 0.0));
  EXPECT_NEAR(r.lhs, 0.5, 1e-12);
  EXPECT_NEAR(r.rhs, 0.25, 1e-12);
  EXPECT_NEAR(r.margin, -0.25, 1e-12);
  EXPECT_TRUE(r.violated);
  EXPECT_NEAR(objective(r), 0.25, 1e-12);
}

TEST(WignerCheck, EqualSecondAndThirdSettings) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(3)));
  const Direction a(0.9, 2.0);
  const Direction b(1.3, 0.4);
  const InequalityReport r = wigner_check(p, a, b, b);
  EXPECT_EQ(r.lhs, p.joint(b, b));
  EXPECT_EQ(r.rhs, 2.0 * p.joint(a, b));
}

TEST(QuadraticCheck, PoleEquality) {
  const CorrelationProvider p = lc_provider(singlet(SpinQuantum(1)));
  const Direction z = Direction::z_axis();
  const InequalityReport r = quadratic_check(p, z, z, z);
  EXPECT_NEAR(r.lhs, 4.0, 1e-15);
  EXPECT_NEAR(r.rhs, 4.0, 1e-15);
  EXPECT_FALSE(r.violated);
}

TEST(QuadraticCheck, ProductFormMatchesDifferenceOfSquares) {
  std::mt19937_64 rng(89);
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(3)));
  for (int i = 0; i < 100; ++i) {
    const Direction a = random_direction(rng);
    const Direction b = random_direction(rng);
    const Direction c = random_direction(rng);
    const double pab = p.correlation(a, b);
    const double pac = p.correlation(a, c);
    const double squares = (pab + pac) * (pab + pac) - (pab - pac) * (pab - pac);
    EXPECT_NEAR(quadratic_check(p, a, b, c).rhs, squares, 1e-14);
  }
}

TEST(Reports, InvariantUnderPhiShift) {
  std::mt19937_64 rng(91);
  const CorrelationProvider p = full_provider({SpinQuantum(3), random_coefficients(rng)});
  for (InequalityKind kind :
       {InequalityKind::bell, InequalityKind::chsh, InequalityKind::wigner, InequalityKind::quadratic}) {
    std::vector<Direction> base;
    std::vector<Direction> shifted;
    for (int i = 0; i < directions_for(kind); ++i) {
      const Direction d = random_direction(rng);
      base.push_back(d);
      shifted.emplace_back(d.theta(), d.phi() + kTwoPi);
    }
    const InequalityReport r1 = evaluate(kind, p, base);
    const InequalityReport r2 = evaluate(kind, p, shifted);
    EXPECT_NEAR(r1.lhs, r2.lhs, 1e-12);
    EXPECT_NEAR(r1.rhs, r2.rhs, 1e-12);
    EXPECT_NEAR(r1.margin, r2.margin, 1e-12);
  }
}

CorrelationProvider constant_provider(double value) {
  return {Provenance::full, [value](const Direction&, const Direction&) { return value; },
          [](const Direction&, const Direction&) { return 0.0; }};
}

TEST(Reports, ViolationFlagFollowsTolerance) {
  // A constant correlation c gives a chsh value of exactly 2|c|.
  const Direction z = Direction::z_axis();
  const InequalityReport inside = chsh_check(constant_provider(1.0 + 0.25e-9), z, z, z, z);
  EXPECT_LT(inside.margin, 0.0);
  EXPECT_FALSE(inside.violated);
  const InequalityReport outside = chsh_check(constant_provider(1.0 + 1e-9), z, z, z, z);
  EXPECT_TRUE(outside.violated);
}

TEST(Evaluate, RejectsWrongArity) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  const std::vector<Direction> three(3, Direction::z_axis());
  EXPECT_THROW((void)evaluate(InequalityKind::chsh, p, three), Error);
  EXPECT_NO_THROW((void)evaluate(InequalityKind::bell, p, three));
}

TEST(Names, RoundTrip) {
  for (InequalityKind kind :
       {InequalityKind::bell, InequalityKind::chsh, InequalityKind::wigner, InequalityKind::quadratic}) {
    EXPECT_EQ(parse_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_kind("leggett").has_value());
  EXPECT_EQ(to_string(Provenance::sampled), "sampled");
}

TEST(SampledProvider, TracksExactCorrelation) {
  const CatState st = singlet(SpinQuantum(1));
  const CorrelationProvider p = sampled_provider(st, 200000, 7);
  const Direction a(0.6, 0.1);
  const Direction b(2.1, 1.7);
  const double exact = correlation(st, a, b).p_total;
  EXPECT_NEAR(p.correlation(a, b), exact, 0.02);
  EXPECT_EQ(p.correlation(a, b), p.correlation(a, b));
  EXPECT_EQ(p.provenance, Provenance::sampled);
}

}  // namespace
}  // namespace bellcat
