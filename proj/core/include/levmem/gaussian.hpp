#pragma once

#include <array>
#include <complex>

namespace levmem {

/// Conventions for quantities whose published forms differ from the
/// internally consistent ones; `standard` is the default everywhere.
enum class FidelityConvention { standard, paper };

/// Protocol timing and rate inputs for the analytic Gaussian-state transfer.
/// Couplings are the constant-pulse values; t_1s / t_2s the write/read
/// durations, t_f the free-evolution time between them.
struct TransferParams {
  double G_w = 0.0;       // rad/s
  double G_r = 0.0;       // rad/s
  double B = 0.0;         // rad/s, optical damping during write (B_s + B_w)
  double B_r = 0.0;       // rad/s, optical damping during read
  double Gamma = 0.0;     // rad/s, mechanical damping
  double gamma_noise = 0.0;
  double F_noise = 0.0;
  double N_mech = 0.0;    // thermal phonon occupation
  double t_1s = 0.0;      // s
  double t_2s = 0.0;      // s
  double t_f = 0.0;       // s
  bool free_stage_noise = true;  // include mechanical noise picked up during t_f
};

/// Deterministic transfer coefficients and attenuation factors.
struct TransferCoefficients {
  double eta_w = 0.0;  // exp(-B t_1s)
  double eta_f = 0.0;  // exp(-Gamma (t_f + t_1s))
  double eta_r = 0.0;  // exp(-B_r t_2s)
  double zeta = 0.0;   // 1 - exp(-B_r t_2s - Gamma t_f - Gamma t_1s)
  double xi = 0.0;     // published displacement attenuation
  double c1 = 0.0;     // X_in -> X_out coefficient from the exact kernels
  double c2 = 0.0;     // P_mech,in -> X_out coefficient
};

TransferCoefficients transfer_coefficients(const TransferParams& p);

/// 2x2 covariance (vacuum = identity) and mean of the retrieved quadratures.
struct GaussianState {
  std::array<double, 2> mean{};      // (<X>, <Y>)
  std::array<double, 3> cov{};       // (V_XX, V_YY, V_XY)
};

/// Retrieved state for an input squeezed coherent state (alpha, r): means use
/// the exact kernel coefficient c1, variances the closed-form window
/// integrals of the write/free/read noise.
GaussianState propagate_state(const TransferParams& p, std::complex<double> alpha,
                              double r);

/// Transfer fidelity between the input squeezed coherent state and the
/// retrieved Gaussian state.
double fidelity(const TransferParams& p, std::complex<double> alpha, double r,
                FidelityConvention conv = FidelityConvention::standard);

/// Input squeezed coherent state in the same convention (vacuum covariance 1,
/// mean (2Re alpha, 2Im alpha), squeezing along X).
GaussianState input_state(std::complex<double> alpha, double r);

/// Gaussian Wigner density at (x, y); normalized to unit mass over the plane.
double wigner_at(const GaussianState& s, double x, double y);

/// Wigner function of the retrieved state at phase-space point (x, y), with
/// the displacement attenuated by xi as published.
double wigner(const TransferParams& p, std::complex<double> alpha, double r,
              double x, double y);

}  // namespace levmem
