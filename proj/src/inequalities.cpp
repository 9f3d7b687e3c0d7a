// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/inequalities.hpp"

#include <bit>
#include <cmath>

#include "bellcat/error.hpp"
#include "bellcat/montecarlo.hpp"

namespace bellcat {

namespace {

InequalityReport make_report(InequalityKind kind, double lhs, double rhs, double margin,
                             std::vector<Direction> config) {
  return {kind, lhs, rhs, margin, margin < -kViolationTolerance, std::move(config)};
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over h ^ v
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t cell_seed(std::uint64_t seed, const Direction& a, const Direction& b) {
  std::uint64_t h = mix(0, seed);
  for (double x : {a.theta(), a.phi(), b.theta(), b.phi()}) h = mix(h, std::bit_cast<std::uint64_t>(x));
  return h;
}

}  // namespace

CorrelationProvider lc_provider(const CatState& st, CorrelationMode mode) {
  return {Provenance::lc_only,
          [st, mode](const Direction& a, const Direction& b) { return correlation(st, a, b, mode).p_lc; },
          [st](const Direction& a, const Direction& b) {
            return wigner_joint(st, a, b, Sign::plus, Sign::plus, DensityPart::lc);
          }};
}

CorrelationProvider full_provider(const CatState& st, CorrelationMode mode) {
  return {Provenance::full,
          [st, mode](const Direction& a, const Direction& b) { return correlation(st, a, b, mode).p_total; },
          [st](const Direction& a, const Direction& b) {
            return wigner_joint(st, a, b, Sign::plus, Sign::plus, DensityPart::full);
          }};
}

CorrelationProvider sampled_provider(const CatState& st, std::uint64_t samples, std::uint64_t seed,
                                     CorrelationMode mode) {
  const bool post = mode == CorrelationMode::postselected;
  return {Provenance::sampled,
          [=](const Direction& a, const Direction& b) {
            return sample_outcomes(st, a, b, samples, cell_seed(seed, a, b), post).estimate;
          },
          [=](const Direction& a, const Direction& b) {
            const SampleStats s = sample_outcomes(st, a, b, samples, cell_seed(seed, a, b), post);
            const double denom = post ? static_cast<double>(s.conclusive()) : static_cast<double>(s.n_total);
            return static_cast<double>(s.counts[0]) / denom;
          }};
}

InequalityReport bell_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                            const Direction& c) {
  const double lhs = std::abs(p.correlation(a, b) - p.correlation(a, c));
  const double rhs = 1.0 + p.correlation(b, c);
  return make_report(InequalityKind::bell, lhs, rhs, rhs - lhs, {a, b, c});
}

InequalityReport chsh_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                            const Direction& c, const Direction& d) {
  const double value =
      std::abs(p.correlation(a, b) + p.correlation(a, c) + p.correlation(d, b) - p.correlation(d, c));
  return make_report(InequalityKind::chsh, value, 2.0, 2.0 - value, {a, b, c, d});
}

InequalityReport wigner_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                              const Direction& c) {
  const double lhs = p.joint(b, c);
  const double rhs = p.joint(a, b) + p.joint(a, c);
  return make_report(InequalityKind::wigner, lhs, rhs, rhs - lhs, {a, b, c});
}

InequalityReport quadratic_check(const CorrelationProvider& p, const Direction& a, const Direction& b,
                                 const Direction& c) {
  const double lhs = 4.0 * std::abs(p.correlation(b, c));
  const double rhs = 4.0 * p.correlation(a, b) * p.correlation(a, c);
  return make_report(InequalityKind::quadratic, lhs, rhs, lhs - rhs, {a, b, c});
}

InequalityReport evaluate(InequalityKind kind, const CorrelationProvider& p, std::span<const Direction> config) {
  if (static_cast<int>(config.size()) != directions_for(kind)) {
    throw Error(Errc::invalid_argument, std::string(to_string(kind)) + " needs " +
                                            std::to_string(directions_for(kind)) + " directions, got " +
                                            std::to_string(config.size()));
  }
  switch (kind) {
    case InequalityKind::bell:
      return bell_check(p, config[0], config[1], config[2]);
    case InequalityKind::chsh:
      return chsh_check(p, config[0], config[1], config[2], config[3]);
    case InequalityKind::wigner:
      return wigner_check(p, config[0], config[1], config[2]);
    case InequalityKind::quadratic:
      return quadratic_check(p, config[0], config[1], config[2]);
  }
  throw Error(Errc::invalid_argument, "unknown inequality kind");
}

double objective(const InequalityReport& r) noexcept { return r.kind == InequalityKind::chsh ? r.lhs : -r.margin; }

std::string_view to_string(InequalityKind k) noexcept {
  switch (k) {
    case InequalityKind::bell:
      return "bell";
    case InequalityKind::chsh:
      return "chsh";
    case InequalityKind::wigner:
      return "wigner";
    case InequalityKind::quadratic:
      return "quadratic";
  }
  return "?";
}

std::optional<InequalityKind> parse_kind(std::string_view s) noexcept {
  for (InequalityKind k : {InequalityKind::bell, InequalityKind::chsh, InequalityKind::wigner,
                           InequalityKind::quadratic}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::lc_only:
      return "lc";
    case Provenance::full:
      return "full";
    case Provenance::sampled:
      return "sampled";
  }
  return "?";
}

}  // namespace bellcat
