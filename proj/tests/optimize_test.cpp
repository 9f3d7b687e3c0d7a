// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bellcat/error.hpp"
#include "bellcat/optimize.hpp"
#include "test_support.hpp"

namespace bellcat {
namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

TEST(GridSweep, SingletChshHitsTsirelsonOnGrid) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  const OptimizationResult r = grid_sweep(p, InequalityKind::chsh, 5);
  EXPECT_NEAR(r.best_value, kTsirelson, 1e-9);
  EXPECT_EQ(r.evaluations, 390625u);
  ASSERT_EQ(r.best_config.size(), 4u);
  EXPECT_NEAR(evaluate(InequalityKind::chsh, p, r.best_config).lhs, r.best_value, 1e-15);
}

TEST(GridSweep, LocalChshStaysBelowBound) {
  for (int two_s : {1, 2, 3}) {
    const OptimizationResult r = grid_sweep(lc_provider(singlet(SpinQuantum(two_s))), InequalityKind::chsh, 5);
    EXPECT_LE(r.best_value, 2.0 + 1e-9) << two_s;
  }
}

TEST(GridSweep, SpinOneBellNeverViolated) {
  const OptimizationResult r = grid_sweep(full_provider(singlet(SpinQuantum(2))), InequalityKind::bell, 7);
  // objective is -margin
  EXPECT_LE(r.best_value, 1e-9);
  EXPECT_EQ(r.evaluations, 117649u);
}

TEST(GridSweep, EmitsRowsInLexicographicOrder) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  std::vector<std::vector<double>> rows;
  std::vector<double> values;
  const OptimizationResult r = grid_sweep(
      p, InequalityKind::bell, 3,
      [&](std::span<const double> angles, double v) {
        rows.emplace_back(angles.begin(), angles.end());
        values.push_back(v);
      },
      2);
  ASSERT_EQ(rows.size(), 729u);
  EXPECT_EQ(rows.front(), std::vector<double>(6, 0.0));
  // last coordinate changes fastest: phi_c steps by 2 pi / 3
  EXPECT_NEAR(rows[1][5], kTwoPi / 3.0, 1e-15);
  EXPECT_NEAR(rows[3][4], 0.5 * kPi, 1e-15);
  EXPECT_NEAR(rows.back()[0], kPi, 1e-15);
  double best = values.front();
  for (double v : values) best = std::max(best, v);
  EXPECT_EQ(best, r.best_value);
}

TEST(GridSweep, ThreadCountDoesNotChangeResult) {
  const CorrelationProvider p = full_provider({SpinQuantum(3), {0.3, 0.2, 1.1}});
  const OptimizationResult one = grid_sweep(p, InequalityKind::wigner, 6, {}, 1);
  const OptimizationResult four = grid_sweep(p, InequalityKind::wigner, 6, {}, 4);
  EXPECT_EQ(one.best_value, four.best_value);
  for (std::size_t i = 0; i < one.best_config.size(); ++i) {
    EXPECT_EQ(one.best_config[i].theta(), four.best_config[i].theta());
    EXPECT_EQ(one.best_config[i].phi(), four.best_config[i].phi());
  }
}

TEST(GridSweep, Guards) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  try {
    (void)grid_sweep(p, InequalityKind::chsh, 11);
    FAIL() << "expected grid_too_large";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::grid_too_large);
  }
  EXPECT_THROW((void)grid_sweep(p, InequalityKind::bell, 1), Error);
}

TEST(Refine, ReachesTsirelsonFromGridBest) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  AngleConfig start = {Direction(1.2, 0.1), Direction(1.9, 0.9), Direction(1.4, 5.4), Direction(1.7, 1.4)};
  const OptimizationResult r = refine(p, InequalityKind::chsh, start);
  EXPECT_NEAR(r.best_value, kTsirelson, 1e-6);
  EXPECT_TRUE(r.converged);
}

TEST(Refine, WignerSpinOneLocalViolation) {
  const CorrelationProvider p = lc_provider(singlet(SpinQuantum(2)));
  const AngleConfig start = {Direction(1.5, 0.05), Direction(0.1, 0.0), Direction(3.0, 0.1)};
  const OptimizationResult r = refine(p, InequalityKind::wigner, start);
  EXPECT_GE(r.best_value, 0.25 - 1e-6);
}

TEST(Refine, NeverWorseThanStart) {
  std::mt19937_64 rng(101);
  for (InequalityKind kind :
       {InequalityKind::bell, InequalityKind::chsh, InequalityKind::wigner, InequalityKind::quadratic}) {
    const CorrelationProvider p = full_provider({SpinQuantum(3), testing::random_coefficients(rng)});
    for (int t = 0; t < 5; ++t) {
      AngleConfig start;
      for (int i = 0; i < directions_for(kind); ++i) start.push_back(testing::random_direction(rng));
      const double v0 = objective(evaluate(kind, p, start));
      const OptimizationResult r = refine(p, kind, start, {.max_iter = 50});
      EXPECT_GE(r.best_value, v0);
      EXPECT_NEAR(objective(evaluate(kind, p, r.best_config)), r.best_value, 1e-12);
    }
  }
}

TEST(Refine, RecordsTraceAndCanonicalizes) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  const AngleConfig start = {Direction(0.2, 6.2), Direction(3.0, 0.1), Direction(1.0, 1.0)};
  const OptimizationResult r = refine(p, InequalityKind::bell, start, {.record_trace = true});
  ASSERT_FALSE(r.trace.empty());
  for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_GE(r.trace[i].second, r.trace[i - 1].second);
  for (const Direction& d : r.best_config) {
    EXPECT_GE(d.theta(), 0.0);
    EXPECT_LE(d.theta(), kPi);
    EXPECT_GE(d.phi(), 0.0);
    EXPECT_LT(d.phi(), kTwoPi);
  }
}

TEST(Multistart, DeterministicForSeed) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(3)));
  const OptimizationResult a = multistart(p, InequalityKind::chsh, 10, 42);
  const OptimizationResult b = multistart(p, InequalityKind::chsh, 10, 42);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.evaluations, b.evaluations);
  ASSERT_EQ(a.best_config.size(), b.best_config.size());
  for (std::size_t i = 0; i < a.best_config.size(); ++i) {
    EXPECT_EQ(a.best_config[i].theta(), b.best_config[i].theta());
    EXPECT_EQ(a.best_config[i].phi(), b.best_config[i].phi());
  }
}

TEST(Multistart, IntegerSpinChshBounded) {
  for (int two_s : {2, 4}) {
    const OptimizationResult r = multistart(full_provider(singlet(SpinQuantum(two_s))), InequalityKind::chsh, 50, 7);
    EXPECT_LE(r.best_value, 2.0 + 1e-9) << two_s;
  }
}

TEST(Multistart, SpinThreeHalvesChshReported) {
  const OptimizationResult r = multistart(full_provider(singlet(SpinQuantum(3))), InequalityKind::chsh, 20, 3);
  EXPECT_TRUE(std::isfinite(r.best_value));
  EXPECT_GT(r.best_value, 0.0);
}

TEST(Optimize, GridThenRefine) {
  const CorrelationProvider p = full_provider(singlet(SpinQuantum(1)));
  OptimizeSettings settings;
  settings.resolution = 4;
  settings.starts = 2;
  settings.seed = 5;
  const OptimizationResult r = optimize(p, InequalityKind::chsh, settings);
  EXPECT_NEAR(r.best_value, kTsirelson, 1e-6);
  EXPECT_GT(r.evaluations, 65536u);
}

}  // namespace
}  // namespace bellcat
