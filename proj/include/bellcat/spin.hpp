// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spin.hpp
 * @brief Single-particle spin-s algebra in the Dicke basis.
 *
 * Kets are stored with index k = 0..2s mapping to m = s - k, i.e. the first
 * amplitude belongs to |+s>. This matches the diagonal of s_z (s, s-1, ..., -s).
 */

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace bellcat {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using KetVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Spin quantum number stored as the integer 2s, so half-integer spins stay exact.
class SpinQuantum {
 public:
  /// Throws Error(invalid_argument) unless two_s >= 1.
  explicit SpinQuantum(int two_s);

  [[nodiscard]] int two_s() const noexcept { return two_s_; }
  [[nodiscard]] double s() const noexcept { return 0.5 * two_s_; }
  [[nodiscard]] int dim() const noexcept { return two_s_ + 1; }
  [[nodiscard]] bool is_half_integer() const noexcept { return (two_s_ & 1) != 0; }
  /// (-1)^{2s}: the geometric-phase sign picked up when one polarization is reversed.
  [[nodiscard]] int parity_sign() const noexcept { return is_half_integer() ? -1 : 1; }

  friend bool operator==(SpinQuantum, SpinQuantum) = default;

 private:
  int two_s_;
};

/// Point on the unit sphere. Angles are canonicalized on construction to
/// theta in [0, pi] and phi in [0, 2 pi), so any real pair is accepted.
class Direction {
 public:
  Direction() = default;
  Direction(double theta, double phi);

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] double phi() const noexcept { return phi_; }
  [[nodiscard]] Vec3 unit_vector() const noexcept;

  /// cos(theta/2) and sin(theta/2), written K and Gamma in the closed forms.
  [[nodiscard]] double half_cos() const noexcept;
  [[nodiscard]] double half_sin() const noexcept;

  static Direction z_axis() noexcept { return {}; }

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

[[nodiscard]] double dot(const Vec3& u, const Vec3& v) noexcept;
[[nodiscard]] Vec3 cross(const Vec3& u, const Vec3& v) noexcept;

enum class Sign { plus = 1, minus = -1 };

[[nodiscard]] constexpr int sign_value(Sign s) noexcept { return s == Sign::plus ? 1 : -1; }

struct DickeKet {
  SpinQuantum spin;
  KetVector amps;  // amps[k] is the amplitude of |m = s - k>

  /// Amplitude of |m> addressed by the integer 2m.
  [[nodiscard]] cplx amplitude_at(int two_m) const;
};

struct SpinMatrices {
  SpinQuantum spin;
  ComplexMatrix sx, sy, sz;

  /// The projection s.n along a unit vector.
  [[nodiscard]] ComplexMatrix along(const Vec3& n) const;
};

struct SignedArea {
  double steradians;
};

struct SpinMoments {
  double mean_x, mean_y, mean_z;
  double var_x, var_y, var_z;
};

[[nodiscard]] SpinMatrices spin_matrices(SpinQuantum s);

/// Extreme Dicke state |+s> or |-s>.
[[nodiscard]] DickeKet extreme_state(SpinQuantum s, Sign sign);

/// Spin coherent state |+n>_s or |-n>_s from the binomial Dicke expansion.
/// This is the canonical phase convention for the whole library.
[[nodiscard]] DickeKet coherent_state(SpinQuantum s, const Direction& dir, Sign sign);

/// exp(i theta (m.s)) |+-s> with m = (sin phi, -cos phi, 0). Agrees with
/// coherent_state() up to a global phase; see relative_phase().
[[nodiscard]] DickeKet coherent_state_by_rotation(SpinQuantum s, const Direction& dir, Sign sign);

/// <u|v>. Throws Error(incompatible_spins) if the spins differ.
[[nodiscard]] cplx inner(const DickeKet& u, const DickeKet& v);

/// Phase of <u|v>, i.e. the global phase taking u to v when the two are parallel.
[[nodiscard]] double relative_phase(const DickeKet& u, const DickeKet& v);

/// Signed area of the spherical triangle (north pole, n1, n2), positive when
/// the vertices run counter-clockwise seen from outside. The sign is chosen so
/// that arg <+n1|+n2>_s = s * area (mod 2 pi).
/// Throws Error(degenerate_triangle) when a direction is within 1e-9 of a pole
/// or n1, n2 are (anti)parallel within 1e-9.
[[nodiscard]] SignedArea berry_area(const Direction& n1, const Direction& n2);

[[nodiscard]] SpinMoments spin_moments(const DickeKet& k);

/// sqrt(binom(n, k)); log-space evaluation above n = 30.
[[nodiscard]] double sqrt_binomial(int n, int k);

}  // namespace bellcat
