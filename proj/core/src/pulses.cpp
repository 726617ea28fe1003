#include "levmem/pulses.hpp"

#include <cmath>

#include "levmem/constants.hpp"
#include "levmem/errors.hpp"

namespace levmem {

double PulseSpec::envelope(double t) const {
  switch (shape) {
    case PulseShape::gaussian: {
      const double u = (t - center) / width;
      return amplitude * std::exp(-0.5 * u * u);
    }
    case PulseShape::constant:
      return (t >= center - width && t <= center + width) ? amplitude : 0.0;
  }
  return 0.0;
}

double PulseSpec::area() const {
  switch (shape) {
    case PulseShape::gaussian:
      return std::sqrt(2.0 * constants::pi) * amplitude * width;
    case PulseShape::constant:
      return 2.0 * amplitude * width;
  }
  return 0.0;
}

bool is_half_pi(const PulseSpec& pulse, double tol) {
  return std::abs(pulse.area() - 0.5 * constants::pi) <= tol;
}

PulseSpec equivalent_constant(const PulseSpec& gaussian_pulse) {
  if (gaussian_pulse.shape != PulseShape::gaussian)
    throw config_error("equivalent_constant: input must be gaussian");
  PulseSpec p = gaussian_pulse;
  p.shape = PulseShape::constant;
  p.amplitude = std::sqrt(constants::pi / 2.0) * gaussian_pulse.amplitude;
  return p;
}

double signal_amplitude(double photons, double B_total, double t_s) {
  if (B_total <= 0.0 || t_s <= 0.0)
    throw config_error("signal_amplitude: B and t_s must be > 0");
  return photons / (4.0 * B_total * std::sqrt(2.0 * constants::pi) * t_s);
}

}  // namespace levmem
