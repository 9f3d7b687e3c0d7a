// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/correlate.hpp"

#include <cmath>

#include "bellcat/error.hpp"

namespace bellcat {

namespace {

constexpr double kImagTolerance = 1e-12;
constexpr double kMinPostselectWeight = 1e-12;

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// <i|L> for a product bra/ket pair.
cplx product_overlap(const ProductKet& bra, const ProductKet& ket) {
  return inner(bra.first, ket.first) * inner(bra.second, ket.second);
}

}  // namespace

std::string_view to_string(CorrelationMode m) noexcept {
  return m == CorrelationMode::raw ? "raw" : "postselected";
}

OutcomeBasis outcome_basis(SpinQuantum s, const Direction& a, const Direction& b) {
  const DickeKet pa = coherent_state(s, a, Sign::plus);
  const DickeKet ma = coherent_state(s, a, Sign::minus);
  const DickeKet pb = coherent_state(s, b, Sign::plus);
  const DickeKet mb = coherent_state(s, b, Sign::minus);
  return {ProductKet{pa, pb}, ProductKet{pa, mb}, ProductKet{ma, pb}, ProductKet{ma, mb}};
}

DiagonalElements rho_elements_oracle(const CatState& st, const Direction& a, const Direction& b) {
  const OutcomeBasis basis = outcome_basis(st.spin, a, b);
  const DensityDyads dyads = density_dyads(st);
  auto diagonal = [&](const std::vector<Dyad>& terms, int i) {
    cplx acc = 0.0;
    for (const Dyad& d : terms) {
      acc += d.weight * product_overlap(basis[i], d.left) * std::conj(product_overlap(basis[i], d.right));
    }
    if (std::abs(acc.imag()) > kImagTolerance) {
      throw Error(Errc::internal_consistency, "diagonal density element has imaginary part " +
                                                  std::to_string(acc.imag()));
    }
    return acc.real();
  };
  DiagonalElements out;
  for (int i = 0; i < 4; ++i) {
    out.lc[i] = diagonal(dyads.lc_terms, i);
    out.nlc[i] = diagonal(dyads.nlc_terms, i);
  }
  return out;
}

DiagonalElements rho_elements_closed(const CatState& st, const Direction& a, const Direction& b) {
  const int n = st.spin.two_s();
  // Overlaps with the extreme states: |<+r|+s>| = K^{2s}, |<+r|-s>| = G^{2s}, |<-r|+s>| = G^{2s}, |<-r|-s>| = K^{2s}.
  const double ka = ipow(a.half_cos(), n);
  const double ga = ipow(a.half_sin(), n);
  const double kb = ipow(b.half_cos(), n);
  const double gb = ipow(b.half_sin(), n);
  const double w1 = std::norm(st.coeffs.c1());
  const double w2 = std::norm(st.coeffs.c2());

  DiagonalElements out;
  out.lc[0] = w1 * ka * ka * gb * gb + w2 * ga * ga * kb * kb;
  out.lc[1] = w1 * ka * ka * kb * kb + w2 * ga * ga * gb * gb;
  out.lc[2] = w1 * ga * ga * gb * gb + w2 * ka * ka * kb * kb;
  out.lc[3] = w1 * ga * ga * kb * kb + w2 * ka * ka * gb * gb;

  // 2 Re[c1 c2* e^{i 2s (phi_a - phi_b)}] (KaGaKbGb)^{2s}
  const double interference = std::sin(2.0 * st.coeffs.alpha) * ka * ga * kb * gb *
                              std::cos(n * (a.phi() - b.phi()) + st.coeffs.delta());
  const double reversed = st.spin.parity_sign() * interference;
  out.nlc = {interference, reversed, reversed, interference};
  return out;
}

CorrelationBreakdown correlation(const CatState& st, const Direction& a, const Direction& b, CorrelationMode mode) {
  CorrelationBreakdown out;
  out.mode = mode;
  out.elements = rho_elements_closed(st, a, b);
  const auto& e = out.elements;
  out.p_lc = e.lc[0] + e.lc[3] - e.lc[1] - e.lc[2];
  out.p_nlc = e.nlc[0] + e.nlc[3] - e.nlc[1] - e.nlc[2];
  out.postselect_weight = e.weight();
  if (mode == CorrelationMode::postselected) {
    if (out.postselect_weight < kMinPostselectWeight) {
      throw Error(Errc::degenerate_postselection, "four-outcome weight " + std::to_string(out.postselect_weight) +
                                                      " too small to postselect");
    }
    out.p_lc /= out.postselect_weight;
    out.p_nlc /= out.postselect_weight;
  }
  out.p_total = out.p_lc + out.p_nlc;
  return out;
}

double lc_correlation_closed(SpinQuantum s, const Direction& a, const Direction& b) {
  const int n = 2 * s.two_s();
  const double fa = ipow(a.half_cos(), n) - ipow(a.half_sin(), n);
  const double fb = ipow(b.half_cos(), n) - ipow(b.half_sin(), n);
  return -fa * fb;
}

double nlc_correlation_closed(const CatState& st, const Direction& a, const Direction& b) {
  if (!st.spin.is_half_integer()) return 0.0;
  const int n = st.spin.two_s();
  const double x = ipow(a.half_cos() * a.half_sin() * b.half_cos() * b.half_sin(), n);
  return 4.0 * std::sin(2.0 * st.coeffs.alpha) * x * std::cos(n * (a.phi() - b.phi()) + st.coeffs.delta());
}

double wigner_joint(const CatState& st, const Direction& a, const Direction& b, Sign sa, Sign sb, DensityPart part) {
  const DiagonalElements e = rho_elements_closed(st, a, b);
  const int i = outcome_index(sa, sb);
  return part == DensityPart::lc ? e.lc[i] : e.total(i);
}

double unrestricted_correlation(const CatState& st, const Direction& a, const Direction& b, UnrestrictedNorm norm) {
  const SpinMatrices sm = spin_matrices(st.spin);
  const ComplexMatrix op = kron(sm.along(a.unit_vector()), sm.along(b.unit_vector()));
  const KetVector psi = state_vector(st);
  const double value = psi.dot(op * psi).real();
  return norm == UnrestrictedNorm::raw ? value : value / (st.spin.s() * st.spin.s());
}

}  // namespace bellcat
