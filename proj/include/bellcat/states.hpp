// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bellcat/spin.hpp"

namespace bellcat {

/// c1 = cos(alpha) e^{i gamma1}, c2 = sin(alpha) e^{i gamma2}; normalized by construction.
struct CatCoefficients {
  double alpha = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;

  [[nodiscard]] cplx c1() const { return std::polar(std::cos(alpha), gamma1); }
  [[nodiscard]] cplx c2() const { return std::polar(std::sin(alpha), gamma2); }
  [[nodiscard]] double delta() const noexcept { return gamma1 - gamma2; }
};

/// Bell cat state c1 |+s,-s> + c2 |-s,+s>.
struct CatState {
  SpinQuantum spin;
  CatCoefficients coeffs;
};

struct ProductKet {
  DickeKet first;
  DickeKet second;
};

/// weight * |left><right|
struct Dyad {
  ProductKet left;
  ProductKet right;
  cplx weight;
};

/// Density operator as local (mixture) and non-local (interference) dyads.
struct DensityDyads {
  std::vector<Dyad> lc_terms;
  std::vector<Dyad> nlc_terms;
};

/// Singlet-type cat state, alpha = -pi/4 and gamma1 = gamma2 = 0 (c1 = -c2 = 1/sqrt 2).
[[nodiscard]] CatState singlet(SpinQuantum s);

[[nodiscard]] DensityDyads density_dyads(const CatState& st);

/// Kronecker product u (x) v, index i * dim(v) + j.
[[nodiscard]] KetVector kron(const KetVector& u, const KetVector& v);
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
[[nodiscard]] KetVector to_vector(const ProductKet& p);

/// Dense two-particle state vector |psi_s>.
[[nodiscard]] KetVector state_vector(const CatState& st);

/// Dense (2s+1)^2 density matrix assembled from density_dyads(). Oracle use only.
[[nodiscard]] ComplexMatrix full_matrix(const CatState& st);

/// Dense matrix for one part of the split (lc or nlc).
[[nodiscard]] ComplexMatrix dyads_matrix(const std::vector<Dyad>& terms);

}  // namespace bellcat
