// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/montecarlo.hpp"

#include <cmath>
#include <random>
#include <string>

#include "bellcat/error.hpp"

namespace bellcat {

namespace {
constexpr double kProbabilityTolerance = 1e-12;
}

std::array<double, kCategoryCount> category_probabilities(const CatState& st, const Direction& a,
                                                          const Direction& b) {
  const DiagonalElements e = rho_elements_closed(st, a, b);
  std::array<double, kCategoryCount> p{e.total(0), e.total(1), e.total(2), e.total(3), 0.0};
  // The four coherent-state outcomes are complete for s = 1/2.
  p[kInconclusive] = st.spin.two_s() == 1 ? 0.0 : 1.0 - e.weight();
  for (double& x : p) {
    if (x < -kProbabilityTolerance) {
      throw Error(Errc::negative_probability, "negative outcome probability " + std::to_string(x));
    }
    if (x < kProbabilityTolerance) x = 0.0;
  }
  return p;
}

SampleStats sample_outcomes(const CatState& st, const Direction& a, const Direction& b, std::uint64_t n,
                            std::uint64_t seed, bool postselect) {
  if (n == 0) throw Error(Errc::invalid_argument, "sample count must be at least 1");
  const auto p = category_probabilities(st, a, b);

  std::array<double, kCategoryCount> cdf{};
  double acc = 0.0;
  int last = 0;
  for (int i = 0; i < kCategoryCount; ++i) {
    acc += p[i];
    cdf[i] = acc;
    if (p[i] > 0.0) last = i;
  }
  // Close the CDF on the last populated category so rounding in the sum can
  // never route a draw into an empty one.
  for (int i = last; i < kCategoryCount; ++i) cdf[i] = 1.0;

  SampleStats out;
  out.n_total = n;
  out.seed = seed;
  out.postselect = postselect;
  std::mt19937_64 rng(seed);
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const double u = to_unit_interval(rng());
    int cat = 0;
    while (cat < kCategoryCount - 1 && u >= cdf[cat]) ++cat;
    ++out.counts[cat];
  }

  const auto& c = out.counts;
  const double signed_sum = static_cast<double>(c[0]) + static_cast<double>(c[3]) - static_cast<double>(c[1]) -
                            static_cast<double>(c[2]);
  const double conclusive = static_cast<double>(out.conclusive());
  const double denom = postselect ? conclusive : static_cast<double>(n);
  if (denom == 0.0) {
    throw Error(Errc::zero_conclusive, "no conclusive outcomes drawn; cannot postselect");
  }
  out.estimate = signed_sum / denom;
  // Per-draw values are +-1 on conclusive draws and 0 on inconclusive ones, so
  // sum(x^2) is the conclusive count.
  if (denom > 1.0) {
    const double var = std::max(0.0, (conclusive - denom * out.estimate * out.estimate) / (denom - 1.0));
    out.std_error = std::sqrt(var / denom);
  }
  return out;
}

PhotonEmulation photon_emulation(const CatState& st, const Direction& a, const Direction& b, std::uint64_t n,
                                 std::uint64_t seed) {
  if (st.spin.two_s() != 2) {
    throw Error(Errc::unsupported_scenario, "photon-pair emulation models LG_{+-1} modes and needs s = 1");
  }
  PhotonEmulation out;
  out.stats = sample_outcomes(st, a, b, n, seed, false);
  const auto& c = out.stats.counts;
  for (int i = 0; i < 4; ++i) out.p_joint[i] = static_cast<double>(c[i]) / static_cast<double>(n);
  const double nc = static_cast<double>(out.stats.conclusive());
  if (nc > 0.0) {
    const double pa_plus = static_cast<double>(c[0] + c[1]) / nc;
    const double pa_minus = static_cast<double>(c[2] + c[3]) / nc;
    const double pb_plus = static_cast<double>(c[0] + c[2]) / nc;
    const double pb_minus = static_cast<double>(c[1] + c[3]) / nc;
    out.marginals = {pa_plus, pa_minus, pb_plus, pb_minus};
    out.p_ab = pa_plus * pb_plus - pa_plus * pb_minus - pa_minus * pb_plus + pa_minus * pb_minus;
  }
  return out;
}

}  // namespace bellcat
