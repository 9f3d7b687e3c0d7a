// Copyright 2026 The bellcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellcat/spin.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "bellcat/error.hpp"

namespace bellcat {

namespace {

constexpr double kPoleTolerance = 1e-9;
constexpr int kLogBinomialThreshold = 30;  // 2s above this uses lgamma

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// x^n for small non-negative integer n, exact for x = 0.
double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

SpinQuantum::SpinQuantum(int two_s) : two_s_(two_s) {
  if (two_s < 1) {
    throw Error(Errc::invalid_argument, "spin quantum number requires 2s >= 1, got " + std::to_string(two_s));
  }
}

Direction::Direction(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw Error(Errc::invalid_argument, "direction angles must be finite");
  }
  double t = wrap_two_pi(theta);
  if (t > kPi) {
    t = kTwoPi - t;
    phi += kPi;
  }
  theta_ = t;
  phi_ = wrap_two_pi(phi);
}

Vec3 Direction::unit_vector() const noexcept {
  const double st = std::sin(theta_);
  return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

double Direction::half_cos() const noexcept { return std::cos(0.5 * theta_); }
double Direction::half_sin() const noexcept { return std::sin(0.5 * theta_); }

double dot(const Vec3& u, const Vec3& v) noexcept { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 cross(const Vec3& u, const Vec3& v) noexcept {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

cplx DickeKet::amplitude_at(int two_m) const {
  const int offset = spin.two_s() - two_m;  // 2k
  if (offset < 0 || offset > 2 * spin.two_s() || (offset & 1) != 0) {
    throw Error(Errc::invalid_argument, "2m = " + std::to_string(two_m) + " is not a level of this spin");
  }
  return amps(offset / 2);
}

ComplexMatrix SpinMatrices::along(const Vec3& n) const { return n[0] * sx + n[1] * sy + n[2] * sz; }

double sqrt_binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n > kLogBinomialThreshold) {
    const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    return std::exp(0.5 * log_binom);
  }
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::sqrt(b);
}

SpinMatrices spin_matrices(SpinQuantum s) {
  const int d = s.dim();
  const double sv = s.s();
  ComplexMatrix sz = ComplexMatrix::Zero(d, d);
  ComplexMatrix sp = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = sv - k;
    sz(k, k) = m;
    // s+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, and |m+1> sits at index k-1
    if (k > 0) sp(k - 1, k) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix sm = sp.adjoint();
  ComplexMatrix sx = 0.5 * (sp + sm);
  ComplexMatrix sy = cplx(0.0, -0.5) * (sp - sm);
  return {s, std::move(sx), std::move(sy), std::move(sz)};
}

DickeKet extreme_state(SpinQuantum s, Sign sign) {
  KetVector v = KetVector::Zero(s.dim());
  v(sign == Sign::plus ? 0 : s.two_s()) = 1.0;
  return {s, std::move(v)};
}

DickeKet coherent_state(SpinQuantum s, const Direction& dir, Sign sign) {
  const int n = s.two_s();
  const double kc = dir.half_cos();
  const double gs = dir.half_sin();
  const bool plus = sign == Sign::plus;
  // |+a>: sqrt(C(2s, s+m)) K^{s+m} G^{s-m} e^{i(s-m)phi}
  // |-a>: sqrt(C(2s, s+m)) K^{s-m} G^{s+m} e^{i(s-m)(phi+pi)}
  // with s - m = k.
  KetVector v(n + 1);
  for (int k = 0; k <= n; ++k) {
    const int k_pow = plus ? n - k : k;
    const int g_pow = plus ? k : n - k;
    double mag;
    if (n > kLogBinomialThreshold) {
      const double lk = k_pow == 0 ? 0.0 : k_pow * std::log(kc);
      const double lg = g_pow == 0 ? 0.0 : g_pow * std::log(gs);
      mag = sqrt_binomial(n, k) * std::exp(lk + lg);
    } else {
      mag = sqrt_binomial(n, k) * ipow(kc, k_pow) * ipow(gs, g_pow);
    }
    if (!plus && (k & 1)) mag = -mag;
    v(k) = std::polar(mag, k * dir.phi());
  }
  v.normalize();
  return {s, std::move(v)};
}

DickeKet coherent_state_by_rotation(SpinQuantum s, const Direction& dir, Sign sign) {
  const SpinMatrices sm = spin_matrices(s);
  const ComplexMatrix generator = std::sin(dir.phi()) * sm.sx - std::cos(dir.phi()) * sm.sy;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(generator);
  const Eigen::VectorXd& w = eig.eigenvalues();
  const ComplexMatrix& vecs = eig.eigenvectors();
  KetVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, dir.theta() * w(i));
  const ComplexMatrix rotation = vecs * phases.asDiagonal() * vecs.adjoint();
  KetVector v = rotation * extreme_state(s, sign).amps;
  v.normalize();
  return {s, std::move(v)};
}

cplx inner(const DickeKet& u, const DickeKet& v) {
  if (u.spin != v.spin || u.amps.size() != v.amps.size()) {
    throw Error(Errc::incompatible_spins, "inner product of kets with different spin (2s = " +
                                              std::to_string(u.spin.two_s()) + " vs " +
                                              std::to_string(v.spin.two_s()) + ")");
  }
  return u.amps.dot(v.amps);
}

double relative_phase(const DickeKet& u, const DickeKet& v) { return std::arg(inner(u, v)); }

SignedArea berry_area(const Direction& n1, const Direction& n2) {
  for (const Direction* d : {&n1, &n2}) {
    if (d->theta() < kPoleTolerance || d->theta() > kPi - kPoleTolerance) {
      throw Error(Errc::degenerate_triangle, "spherical triangle degenerate: direction at a pole");
    }
  }
  const Vec3 u = n1.unit_vector();
  const Vec3 v = n2.unit_vector();
  const Vec3 c = cross(u, v);
  if (std::sqrt(dot(c, c)) < kPoleTolerance) {
    throw Error(Errc::degenerate_triangle, "spherical triangle degenerate: directions (anti)parallel");
  }
  // Van Oosterom-Strackee solid angle of (z, u, v).
  const double num = c[2];
  const double den = 1.0 + u[2] + v[2] + dot(u, v);
  return {2.0 * std::atan2(num, den)};
}

SpinMoments spin_moments(const DickeKet& k) {
  const SpinMatrices sm = spin_matrices(k.spin);
  auto moments = [&](const ComplexMatrix& op) {
    const KetVector op_k = op * k.amps;
    const double mean = k.amps.dot(op_k).real();
    const double second = op_k.squaredNorm();  // <k|op^2|k> for Hermitian op
    return std::pair{mean, second - mean * mean};
  };
  const auto [mx, vx] = moments(sm.sx);
  const auto [my, vy] = moments(sm.sy);
  const auto [mz, vz] = moments(sm.sz);
  return {mx, my, mz, vx, vy, vz};
}

}  // namespace bellcat
