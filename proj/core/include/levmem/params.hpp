#pragma once

#include <optional>

namespace levmem {

/// Cooperativity constant convention. `consistent` uses C = G^2/(Gamma*B),
/// which makes the closed-form dc transmission 2*sqrt(Cw*Cr)/(Cw+Cr+1) agree
/// exactly with the full scattering matrix; `quadruple` uses C = 4G^2/(Gamma*B).
enum class CoopConvention { consistent, quadruple };

/// Raw experimental inputs, all SI (rad/s for every frequency-like quantity).
struct PhysicalParams {
  double mass = 0.0;        // kg
  double omega_x = 0.0;     // rad/s, trap frequency along x
  double radius = 0.0;      // m
  double epsilon_c = 0.0;   // relative-permittivity factor
  double lambda_s = 0.0;    // m, signal wavelength
  double lambda_w = 0.0;    // m, write wavelength
  double lambda_r = 0.0;    // m, read wavelength
  double delta_x = 0.0;     // m, signal-focus offset
  double waist_w0 = 0.0;    // m, signal waist
  double signal_linewidth = 0.0;  // rad/s
  double pressure = 0.0;    // Pa
  double temperature = 0.0; // K
  std::optional<double> gas_viscosity;  // Pa s (Stokes route)
  std::optional<double> gamma_g;        // rad/s (direct gas damping)
  double delta_Gamma = 0.0; // rad/s, feedback damping
  double B_s = 0.0, B_w = 0.0, B_r = 0.0;  // rad/s, optical damping per field
  double A_t = 0.0, A_w = 0.0, A_r = 0.0;  // rad/s, heating (carried only)
  double chi = 0.0;             // scaled coupling
  double photon_flux_Phi = 0.0; // 1/s
  double gain_G = 0.0;          // feedback gain
  double N_mech = 0.0;          // mean thermal phonon occupation
  std::optional<double> gamma_noise;  // thermal noise strength (rate)
  std::optional<double> F_noise;      // feedback noise strength (rate)
  double detuning_Delta = 0.0;        // rad/s

  /// Throws config_error on violated invariants (positivity, exactly one gas
  /// damping route, non-negative rates).
  void validate() const;
};

/// Quantities computed once from PhysicalParams and consumed everywhere else.
struct DerivedRates {
  double ell_x = 0.0;    // m, zero-point fluctuation
  double eta_f = 0.0;    // kg/s, friction coefficient (0 if direct gamma_g)
  double gamma_g = 0.0;  // rad/s
  double Gamma = 0.0;    // rad/s, total mechanical damping
  double D_p = 0.0, D_q = 0.0;  // gas diffusion coefficients
  double gamma_noise = 0.0;     // thermal noise strength
  double F_noise = 0.0;         // feedback noise strength
  double B_write_total = 0.0;   // B_s + B_w
  double C_w = 0.0, C_r = 0.0;  // cooperativities
  double tau_R = 0.0;           // s, relaxation time 1/Gamma
};

double cooperativity(double G, double Gamma, double B, CoopConvention conv);

DerivedRates derive_rates(const PhysicalParams& p, double G_w0, double G_r0,
                          CoopConvention conv = CoopConvention::consistent);

/// Single-photon optomechanical coupling from the dielectric-response formula,
/// with the reference length taken as ell_x.
double coupling_g(const PhysicalParams& p);

/// Printed-formula calculators for the noise strengths. Both are dimensionally
/// irregular as rates and log a caveat to stderr when used; direct inputs in
/// PhysicalParams take precedence in derive_rates.
double thermal_noise_formula(const PhysicalParams& p, double gamma_g);
double feedback_noise_formula(const PhysicalParams& p);

}  // namespace levmem
