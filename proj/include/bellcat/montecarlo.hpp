// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file montecarlo.hpp
 * @brief Finite-sample measurement records drawn from the exact outcome probabilities.
 *
 * Every draw falls in one of five categories, in this fixed order:
 * ++, +-, -+, --, inconclusive. The last one holds the mass 1 - sum(rho_ii)
 * that leaves the two-coherent-state outcome space (zero for s = 1/2).
 *
 * Generator: std::mt19937_64 seeded with the 64-bit seed; each draw takes the
 * top 53 bits as a uniform in [0, 1) and picks a category by inverse CDF.
 */

#pragma once

#include <array>
#include <cstdint>

#include "bellcat/correlate.hpp"

namespace bellcat {

inline constexpr int kCategoryCount = 5;
inline constexpr int kInconclusive = 4;

struct SampleStats {
  std::uint64_t n_total = 0;
  std::array<std::uint64_t, kCategoryCount> counts{};
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  bool postselect = false;

  [[nodiscard]] std::uint64_t conclusive() const noexcept { return n_total - counts[kInconclusive]; }
};

/// Category probabilities (rho11, rho22, rho33, rho44, inconclusive).
/// Throws Error(negative_probability) if any is below -1e-12.
[[nodiscard]] std::array<double, kCategoryCount> category_probabilities(const CatState& st, const Direction& a,
                                                                        const Direction& b);

/// Draw n categorical samples. Estimate = (n11 + n44 - n22 - n33) / D with D = n
/// (raw) or the conclusive count (postselect). stderr is the sample standard
/// deviation of the per-draw outcome value over those D draws divided by sqrt(D).
/// Throws Error(zero_conclusive) in postselect mode when nothing conclusive was drawn.
[[nodiscard]] SampleStats sample_outcomes(const CatState& st, const Direction& a, const Direction& b,
                                          std::uint64_t n, std::uint64_t seed, bool postselect = false);

struct PhotonEmulation {
  /// Coincidence frequencies n_ij / n in the ++, +-, -+, -- order.
  std::array<double, 4> p_joint{};
  /// p+a p+b - p+a p-b - p-a p+b + p-a p-b from single-side marginals.
  double p_ab = 0.0;
  /// Marginals (p+a, p-a, p+b, p-b) over conclusive coincidences.
  std::array<double, 4> marginals{};
  SampleStats stats;
};

/// Spin-1 (LG_{+-1} orbital angular momentum) photon-pair emulation. The
/// coincidence estimator in `stats` is primary; p_ab is the product-of-marginals
/// form reported alongside. Throws Error(unsupported_scenario) unless s = 1.
[[nodiscard]] PhotonEmulation photon_emulation(const CatState& st, const Direction& a, const Direction& b,
                                               std::uint64_t n, std::uint64_t seed);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
[[nodiscard]] constexpr double to_unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace bellcat
