// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/states.hpp"

#include <cmath>

namespace bellcat {

CatState singlet(SpinQuantum s) { return {s, CatCoefficients{-0.25 * kPi, 0.0, 0.0}}; }

DensityDyads density_dyads(const CatState& st) {
  const DickeKet up = extreme_state(st.spin, Sign::plus);
  const DickeKet down = extreme_state(st.spin, Sign::minus);
  const ProductKet ud{up, down};
  const ProductKet du{down, up};
  const cplx c1 = st.coeffs.c1();
  const cplx c2 = st.coeffs.c2();
  DensityDyads out;
  out.lc_terms = {{ud, ud, std::norm(c1)}, {du, du, std::norm(c2)}};
  out.nlc_terms = {{ud, du, c1 * std::conj(c2)}, {du, ud, std::conj(c1) * c2}};
  return out;
}

KetVector kron(const KetVector& u, const KetVector& v) {
  KetVector out(u.size() * v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out.segment(i * v.size(), v.size()) = u(i) * v;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

KetVector to_vector(const ProductKet& p) { return kron(p.first.amps, p.second.amps); }

KetVector state_vector(const CatState& st) {
  const KetVector up = extreme_state(st.spin, Sign::plus).amps;
  const KetVector down = extreme_state(st.spin, Sign::minus).amps;
  return st.coeffs.c1() * kron(up, down) + st.coeffs.c2() * kron(down, up);
}

ComplexMatrix dyads_matrix(const std::vector<Dyad>& terms) {
  ComplexMatrix rho;
  for (const Dyad& d : terms) {
    const KetVector l = to_vector(d.left);
    const KetVector r = to_vector(d.right);
    const ComplexMatrix term = d.weight * (l * r.adjoint());
    if (rho.size() == 0) {
      rho = term;
    } else {
      rho += term;
    }
  }
  return rho;
}

ComplexMatrix full_matrix(const CatState& st) {
  const DensityDyads dy = density_dyads(st);
  return dyads_matrix(dy.lc_terms) + dyads_matrix(dy.nlc_terms);
}

}  // namespace bellcat
