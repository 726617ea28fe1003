#pragma once

namespace levmem {

enum class PulseShape { gaussian, constant };

/// One control (or signal) pulse envelope. Amplitude is in rad/s for control
/// pulses; for the injected signal drive it carries the photon-flux amplitude.
struct PulseSpec {
  PulseShape shape = PulseShape::gaussian;
  double amplitude = 0.0;  // peak value G0
  double center = 0.0;     // s, t_c
  double width = 0.0;      // s, t_s (gaussian sigma; constant: half-duration)

  /// Envelope value at time t. Gaussian: G0*exp(-(t-t_c)^2/(2 t_s^2));
  /// constant: G0 on [t_c - t_s, t_c + t_s], else 0.
  double envelope(double t) const;

  /// Integral of the envelope over all time: sqrt(2*pi)*G0*t_s (gaussian)
  /// or 2*G0*t_s (constant).
  double area() const;
};

/// True when the pulse area is within `tol` (absolute, rad) of pi/2.
bool is_half_pi(const PulseSpec& pulse, double tol = 0.1);

/// Constant pulse with the same area as a gaussian of width t_s, spanning
/// [t_c - t_s, t_c + t_s]: amplitude sqrt(pi/2)*G0.
PulseSpec equivalent_constant(const PulseSpec& gaussian_pulse);

/// Peak flux amplitude for a gaussian signal drive carrying `photons` quanta:
/// 4*B*integral(I_in) = photons  =>  I0 = photons / (4*B*sqrt(2*pi)*t_s).
double signal_amplitude(double photons, double B_total, double t_s);

}  // namespace levmem
