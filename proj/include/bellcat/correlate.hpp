// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlate.hpp
 * @brief Two-outcome-per-side measurement statistics of Bell cat states.
 *
 * Each side measures along its own direction and the outcome is restricted to
 * the two coherent states |+r>_s, |-r>_s. The four joint outcomes are ordered
 *   |1> = |+a,+b>, |2> = |+a,-b>, |3> = |-a,+b>, |4> = |-a,-b>
 * (zero-based index 0..3 here) and carry outcome values +1, -1, -1, +1.
 *
 * For s >= 1 the four outcomes do not exhaust the Hilbert space; the missing
 * probability mass is what postselection renormalizes away.
 */

#pragma once

#include <array>
#include <string_view>

#include "bellcat/states.hpp"

namespace bellcat {

using OutcomeBasis = std::array<ProductKet, 4>;

/// Index 0..3 of the outcome (sa, sb) in the |1>..|4> ordering.
[[nodiscard]] constexpr int outcome_index(Sign sa, Sign sb) noexcept {
  return (sa == Sign::plus ? 0 : 2) + (sb == Sign::plus ? 0 : 1);
}

/// +1 for |1>, |4>; -1 for |2>, |3>.
[[nodiscard]] constexpr double outcome_value(int index) noexcept { return (index == 0 || index == 3) ? 1.0 : -1.0; }

struct DiagonalElements {
  std::array<double, 4> lc{};
  std::array<double, 4> nlc{};

  [[nodiscard]] double total(int i) const noexcept { return lc[i] + nlc[i]; }
  [[nodiscard]] double weight() const noexcept { return total(0) + total(1) + total(2) + total(3); }
};

enum class CorrelationMode { raw, postselected };

struct CorrelationBreakdown {
  double p_total = 0.0;
  double p_lc = 0.0;
  double p_nlc = 0.0;
  double postselect_weight = 0.0;
  CorrelationMode mode = CorrelationMode::raw;
  DiagonalElements elements;
};

enum class DensityPart { lc, full };
enum class UnrestrictedNorm { raw, per_s2 };

[[nodiscard]] OutcomeBasis outcome_basis(SpinQuantum s, const Direction& a, const Direction& b);

/// Diagonal elements <i|rho|i> by explicit inner products of the density dyads
/// with the outcome basis. Throws Error(internal_consistency) if a diagonal
/// element comes out with an imaginary part above 1e-12.
[[nodiscard]] DiagonalElements rho_elements_oracle(const CatState& st, const Direction& a, const Direction& b);

/// Closed-form diagonal elements, general coefficients:
///   lc:  |c1|^2 |<i|+s,-s>|^2 + |c2|^2 |<i|-s,+s>|^2
///   nlc: sin(2 alpha) (KaGaKbGb)^{2s} cos(2s(phi_a - phi_b) + delta) x (1, (-1)^{2s}, (-1)^{2s}, 1)
[[nodiscard]] DiagonalElements rho_elements_closed(const CatState& st, const Direction& a, const Direction& b);

/// P = rho11 + rho44 - rho22 - rho33 with the lc/nlc split. Postselected mode
/// divides by the four-outcome weight and throws Error(degenerate_postselection)
/// when it is below 1e-12.
[[nodiscard]] CorrelationBreakdown correlation(const CatState& st, const Direction& a, const Direction& b,
                                               CorrelationMode mode = CorrelationMode::raw);

/// -(Ka^{4s} - Ga^{4s})(Kb^{4s} - Gb^{4s}); independent of phi and of the coefficients.
[[nodiscard]] double lc_correlation_closed(SpinQuantum s, const Direction& a, const Direction& b);

/// 4 sin(2 alpha) (KaGaKbGb)^{2s} cos(2s(phi_a - phi_b) + delta) for half-integer s, exactly 0 otherwise.
[[nodiscard]] double nlc_correlation_closed(const CatState& st, const Direction& a, const Direction& b);

/// Single joint outcome probability <i|rho_part|i>.
[[nodiscard]] double wigner_joint(const CatState& st, const Direction& a, const Direction& b, Sign sa, Sign sb,
                                  DensityPart part);

/// <psi|(s.a)(s.b)|psi> by dense contraction; per_s2 divides by s^2.
[[nodiscard]] double unrestricted_correlation(const CatState& st, const Direction& a, const Direction& b,
                                              UnrestrictedNorm norm = UnrestrictedNorm::raw);

[[nodiscard]] std::string_view to_string(CorrelationMode m) noexcept;

}  // namespace bellcat
