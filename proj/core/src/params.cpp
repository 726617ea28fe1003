#include "levmem/params.hpp"

#include <cmath>
#include <iostream>

#include "levmem/constants.hpp"
#include "levmem/errors.hpp"

namespace levmem {

namespace {
constexpr double kPi = constants::pi;
}

void PhysicalParams::validate() const {
  if (mass <= 0.0) throw config_error("params: mass must be > 0");
  if (omega_x <= 0.0) throw config_error("params: omega_x must be > 0");
  if (radius <= 0.0) throw config_error("params: radius must be > 0");
  if (temperature <= 0.0) throw config_error("params: temperature must be > 0");
  if (pressure < 0.0) throw config_error("params: pressure must be >= 0");
  if (!gas_viscosity.has_value() && !gamma_g.has_value())
    throw config_error(
        "params: provide exactly one of gas_viscosity (+pressure) or gamma_g");
  if (gas_viscosity.has_value() && gamma_g.has_value())
    throw config_error(
        "params: gas_viscosity and gamma_g are mutually exclusive");
  for (double rate : {delta_Gamma, B_s, B_w, B_r, A_t, A_w, A_r}) {
    if (rate < 0.0) throw config_error("params: damping/heating rates must be >= 0");
  }
  if (N_mech < 0.0) throw config_error("params: N_mech must be >= 0");
  if (gamma_noise && *gamma_noise < 0.0)
    throw config_error("params: gamma_noise must be >= 0");
  if (F_noise && *F_noise < 0.0)
    throw config_error("params: F_noise must be >= 0");
}

double cooperativity(double G, double Gamma, double B, CoopConvention conv) {
  if (G == 0.0) return 0.0;
  const double denom = Gamma * B;
  if (denom <= 0.0) throw config_error("cooperativity: Gamma*B must be > 0");
  const double c = G * G / denom;
  return conv == CoopConvention::consistent ? c : 4.0 * c;
}

double thermal_noise_formula(const PhysicalParams& p, double gamma_g) {
  std::cerr << "levmem: warning: thermal noise strength computed from "
               "2*m*gamma_g*kB*T; the printed formula is dimensionally "
               "irregular as a rate, prefer a direct gamma_noise input\n";
  return 2.0 * p.mass * gamma_g * constants::k_boltzmann * p.temperature;
}

double feedback_noise_formula(const PhysicalParams& p) {
  std::cerr << "levmem: warning: feedback noise strength computed from "
               "54*m*hbar*omega_x*chi^2*Phi*G^2*(2N^2+2N+1); the printed "
               "formula is dimensionally irregular as a rate, prefer a "
               "direct F_noise input\n";
  const double n = p.N_mech;
  return 54.0 * p.mass * constants::hbar * p.omega_x * p.chi * p.chi *
         p.photon_flux_Phi * p.gain_G * p.gain_G * (2.0 * n * n + 2.0 * n + 1.0);
}

DerivedRates derive_rates(const PhysicalParams& p, double G_w0, double G_r0,
                          CoopConvention conv) {
  p.validate();
  if (G_w0 < 0.0 || G_r0 < 0.0)
    throw config_error("derive_rates: pulse amplitudes must be >= 0");

  DerivedRates d;
  d.ell_x = std::sqrt(constants::hbar / (2.0 * p.mass * p.omega_x));

  if (p.gamma_g.has_value()) {
    d.eta_f = 0.0;
    d.gamma_g = *p.gamma_g;
  } else {
    d.eta_f = 6.0 * kPi * (*p.gas_viscosity) * p.radius;  // Stokes friction
    d.gamma_g = d.eta_f / (2.0 * p.mass);
  }
  d.Gamma = d.gamma_g + p.delta_Gamma;
  if (d.Gamma <= 0.0) throw config_error("derive_rates: total damping is zero");
  d.tau_R = 1.0 / d.Gamma;

  const double eta_f_diff =
      p.gas_viscosity ? d.eta_f : 2.0 * p.mass * d.gamma_g;
  const double kT = constants::k_boltzmann * p.temperature;
  const double lx2 = d.ell_x * d.ell_x;
  d.D_p = 2.0 * eta_f_diff * kT * lx2 / (constants::hbar * constants::hbar);
  d.D_q = eta_f_diff * constants::hbar * constants::hbar /
          (24.0 * kT * p.mass * p.mass * lx2);

  d.gamma_noise = p.gamma_noise ? *p.gamma_noise
                                : thermal_noise_formula(p, d.gamma_g);
  d.F_noise = p.F_noise ? *p.F_noise : feedback_noise_formula(p);

  d.B_write_total = p.B_s + p.B_w;
  d.C_w = cooperativity(G_w0, d.Gamma, d.B_write_total, conv);
  d.C_r = cooperativity(G_r0, d.Gamma, p.B_r, conv);

  for (double v : {d.ell_x, d.Gamma, d.tau_R, d.C_w, d.C_r}) {
    if (!(v >= 0.0) || std::isnan(v))
      throw numeric_error("derive_rates: negative or NaN derived quantity");
  }
  return d;
}

double coupling_g(const PhysicalParams& p) {
  if (p.waist_w0 <= 0.0) throw config_error("coupling_g: waist must be > 0");
  const double volume = 4.0 / 3.0 * kPi * std::pow(p.radius, 3);
  const double omega_s = 2.0 * kPi * constants::c_light / p.lambda_s;
  const double ell_x = std::sqrt(constants::hbar / (2.0 * p.mass * p.omega_x));
  const double w0sq = p.waist_w0 * p.waist_w0;
  return volume *
         (2.0 * p.epsilon_c * omega_s * p.signal_linewidth * ell_x) /
         (kPi * kPi * w0sq * constants::c_light) *
         (p.delta_x / w0sq);
}

}  // namespace levmem
