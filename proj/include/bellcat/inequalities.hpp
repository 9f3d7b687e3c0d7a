// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bellcat/correlate.hpp"

namespace bellcat {

enum class Provenance { lc_only, full, sampled };

/// Correlation source for the inequality checks. Both callables must be safe
/// to invoke concurrently.
struct CorrelationProvider {
  Provenance provenance = Provenance::full;
  /// P(a, b) in [-1, 1].
  std::function<double(const Direction&, const Direction&)> correlation;
  /// Joint probability P(+a, +b) in [0, 1], used by the Wigner check.
  std::function<double(const Direction&, const Direction&)> joint;
};

[[nodiscard]] CorrelationProvider lc_provider(const CatState& st, CorrelationMode mode = CorrelationMode::raw);
[[nodiscard]] CorrelationProvider full_provider(const CatState& st, CorrelationMode mode = CorrelationMode::raw);
/// Finite-sample estimates. Every (a, b) cell draws its own stream seeded from
/// `seed` and the bit patterns of the four angles, so calls are reproducible
/// and order-independent.
[[nodiscard]] CorrelationProvider sampled_provider(const CatState& st, std::uint64_t samples, std::uint64_t seed,
                                                   CorrelationMode mode = CorrelationMode::raw);

enum class InequalityKind { bell, chsh, wigner, quadratic };

inline constexpr double kViolationTolerance = 1e-9;

struct InequalityReport {
  InequalityKind kind = InequalityKind::bell;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Slack of the inequality; negative means the inequality fails.
  double margin = 0.0;
  bool violated = false;
  std::vector<Direction> config;
};

/// |P(ab) - P(ac)| <= 1 + P(bc)
[[nodiscard]] InequalityReport bell_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                                          const Direction& c);
/// |P(ab) + P(ac) + P(db) - P(dc)| <= 2
[[nodiscard]] InequalityReport chsh_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                                          const Direction& c, const Direction& d);
/// J(+b,+c) <= J(+a,+b) + J(+a,+c)
[[nodiscard]] InequalityReport wigner_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                                            const Direction& c);
/// 4|P(bc)| >= [P(ab)+P(ac)]^2 - [P(ab)-P(ac)]^2, evaluated as 4 P(ab) P(ac) on the right.
[[nodiscard]] InequalityReport quadratic_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                                               const Direction& c);

/// Number of directions the kind consumes: 4 for chsh, 3 otherwise.
[[nodiscard]] constexpr int directions_for(InequalityKind k) noexcept { return k == InequalityKind::chsh ? 4 : 3; }

/// Dispatch on kind. Throws Error(invalid_argument) on a wrong direction count.
[[nodiscard]] InequalityReport evaluate(InequalityKind kind, const CorrelationProvider& p,
                                        std::span<const Direction> config);

/// Quantity the optimizer maximizes: the CHSH value for chsh, -margin otherwise.
[[nodiscard]] double objective(const InequalityReport& r) noexcept;

[[nodiscard]] std::string_view to_string(InequalityKind k) noexcept;
[[nodiscard]] std::optional<InequalityKind> parse_kind(std::string_view s) noexcept;
[[nodiscard]] std::string_view to_string(Provenance p) noexcept;

}  // namespace bellcat
