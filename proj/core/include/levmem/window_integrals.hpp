#pragma once

#include <cmath>
#include <complex>

// Primitive integrals of an exponential weight against the rotation kernels
// that appear in every write/read transfer window:
//
//   exp_rotation_window(mu, a, t) = ∫_0^t e^{mu s} e^{i a (t-s)} ds
//
// Real and imaginary parts give the cos/sin kernels; squares of kernels reduce
// to these via the double-angle identities. All evaluations are stable in the
// mu -> 0 and a -> 0 limits (series for small |z| instead of (e^z - 1)/z).

namespace levmem {

inline std::complex<double> expm1_over_z(std::complex<double> z) {
  if (std::abs(z) < 1e-4) {
    // 1 + z/2 + z^2/6 + z^3/24 + z^4/120, error O(|z|^5) < 1e-20
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
  }
  return (std::exp(z) - 1.0) / z;
}

inline std::complex<double> exp_rotation_window(double mu, double a, double t) {
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> z = (mu - i * a) * t;
  return std::exp(i * a * t) * t * expm1_over_z(z);
}

/// ∫_0^t e^{mu s} ds
inline double exp_window(double mu, double t) {
  return t * expm1_over_z(std::complex<double>(mu * t, 0.0)).real();
}

/// ∫_0^t e^{mu s} cos^2(g (t-s)) ds
inline double exp_cos_sq_window(double mu, double g, double t) {
  return 0.5 * (exp_window(mu, t) + exp_rotation_window(mu, 2.0 * g, t).real());
}

/// ∫_0^t e^{mu s} sin^2(g (t-s)) ds
inline double exp_sin_sq_window(double mu, double g, double t) {
  return 0.5 * (exp_window(mu, t) - exp_rotation_window(mu, 2.0 * g, t).real());
}

/// ∫_0^t e^{mu s} sin(g (t-s)) cos(g (t-s)) ds
inline double exp_sin_cos_window(double mu, double g, double t) {
  return 0.5 * exp_rotation_window(mu, 2.0 * g, t).imag();
}

}  // namespace levmem
