// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bellcat/inequalities.hpp"

namespace bellcat {

using AngleConfig = std::vector<Direction>;

struct OptimizationResult {
  AngleConfig best_config;
  double best_value = 0.0;
  std::uint64_t evaluations = 0;
  bool converged = false;
  std::vector<std::pair<int, double>> trace;  // (iteration, best value so far)
};

/// Receives every grid point in lexicographic grid order as the flat angle
/// tuple (theta_1, phi_1, theta_2, phi_2, ...) and its objective value.
using RowSink = std::function<void(std::span<const double> angles, double value)>;

inline constexpr double kMaxGridPoints = 1e8;

/// Exhaustive sweep over theta_j = j pi / (r - 1), j = 0..r-1 and
/// phi_j = 2 pi j / r, j = 0..r-1, for every angle of the kind's directions.
/// Maximizes objective(); ties keep the lexicographically smallest angle tuple,
/// so the result does not depend on `threads`. Throws Error(grid_too_large)
/// above 1e8 points and Error(invalid_argument) for resolution < 2.
[[nodiscard]] OptimizationResult grid_sweep(const CorrelationProvider& provider, InequalityKind kind,
                                            int resolution, const RowSink& sink = {}, unsigned threads = 0);

struct RefineOptions {
  int max_iter = 2000;
  double tol = 1e-12;
  double initial_step = 0.1;  // radians
  bool record_trace = false;
};

/// Nelder-Mead on -objective with reflection 1, expansion 2, contraction 0.5
/// and shrink 0.5. Angles move freely and are canonicalized in the result.
/// Stops once the spread of simplex values falls below tol.
[[nodiscard]] OptimizationResult refine(const CorrelationProvider& provider, InequalityKind kind,
                                        const AngleConfig& start, const RefineOptions& opts = {});

/// Draw `starts` uniform random configurations from mt19937_64(seed) and refine each.
[[nodiscard]] OptimizationResult multistart(const CorrelationProvider& provider, InequalityKind kind, int starts,
                                            std::uint64_t seed, const RefineOptions& opts = {});

struct OptimizeSettings {
  int resolution = 0;  // 0 skips the grid stage
  int starts = 20;
  std::uint64_t seed = 0;
  RefineOptions refine;
};

/// Grid sweep (if enabled) refined from its best point, then multistart; best of all.
[[nodiscard]] OptimizationResult optimize(const CorrelationProvider& provider, InequalityKind kind,
                                          const OptimizeSettings& settings);

}  // namespace bellcat
