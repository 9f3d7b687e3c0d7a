// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only generators and brute-force oracles. The oracles here go through
// Eigen eigendecompositions and never touch the closed forms they check.

#pragma once

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "bellcat/correlate.hpp"

namespace bellcat::testing {

inline double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform on the sphere.
inline Direction random_direction(std::mt19937_64& rng) {
  const double theta = std::acos(1.0 - 2.0 * u01(rng));
  return {theta, kTwoPi * u01(rng)};
}

inline CatCoefficients random_coefficients(std::mt19937_64& rng) {
  return {kTwoPi * u01(rng), kTwoPi * u01(rng), kTwoPi * u01(rng)};
}

/// Eigenvector of s.n for eigenvalue sign * s, arbitrary global phase.
inline KetVector extremal_eigenvector(SpinQuantum s, const Direction& n, Sign sign) {
  const ComplexMatrix op = spin_matrices(s).along(n.unit_vector());
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(op);
  // eigenvalues ascending
  return sign == Sign::plus ? KetVector(eig.eigenvectors().col(op.rows() - 1)) : KetVector(eig.eigenvectors().col(0));
}

/// Diagonal elements from eigenvectors of s.a and s.b. Only squared moduli
/// enter, so the eigen-solver's phase choice is irrelevant.
inline DiagonalElements dense_elements(const CatState& st, const Direction& a, const Direction& b) {
  const int top = 0;
  const int bottom = st.spin.two_s();
  const int ia[4] = {1, 1, -1, -1};
  const int ib[4] = {1, -1, 1, -1};
  const double w1 = std::pow(std::cos(st.coeffs.alpha), 2);
  const double w2 = std::pow(std::sin(st.coeffs.alpha), 2);
  DiagonalElements out;
  for (int i = 0; i < 4; ++i) {
    const KetVector ea = extremal_eigenvector(st.spin, a, ia[i] > 0 ? Sign::plus : Sign::minus);
    const KetVector eb = extremal_eigenvector(st.spin, b, ib[i] > 0 ? Sign::plus : Sign::minus);
    // <ea eb|psi> with psi = c1 |top,bottom> + c2 |bottom,top>
    const cplx amp = std::conj(ea(top)) * std::conj(eb(bottom)) * st.coeffs.c1() +
                     std::conj(ea(bottom)) * std::conj(eb(top)) * st.coeffs.c2();
    const double lc = w1 * std::norm(ea(top)) * std::norm(eb(bottom)) + w2 * std::norm(ea(bottom)) * std::norm(eb(top));
    out.lc[i] = lc;
    out.nlc[i] = std::norm(amp) - lc;
  }
  return out;
}

}  // namespace bellcat::testing
