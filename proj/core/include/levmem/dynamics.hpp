#pragma once

#include <array>
#include <functional>
#include <vector>

#include "levmem/pulses.hpp"

namespace levmem {

/// Second-moment state of the linearized write/read dynamics:
/// [ <a+ a> , <b+ b> , Re<a b+> , Im<a b+> ].
using MomentState = std::array<double, 4>;

/// Time-dependent optical damping schedule. The write stage uses
/// B_s + B_w, the read stage B_r; the switch happens at t_switch
/// (midpoint between the write and read pulse centers by default).
struct DampingSchedule {
  double B_write = 0.0;   // rad/s, B_s + B_w
  double B_read = 0.0;    // rad/s, B_r
  double t_switch = 0.0;  // s

  double at(double t) const { return t < t_switch ? B_write : B_read; }
};

/// Everything the moment equations need at runtime.
struct MomentModel {
  PulseSpec write;           // G_w(t)
  PulseSpec read;            // G_r(t)
  PulseSpec signal;          // injected photon flux I_in(t)
  DampingSchedule damping;
  double Gamma = 0.0;        // rad/s, total mechanical damping
  double Delta = 0.0;        // rad/s, detuning
  double gamma_noise = 0.0;  // thermal noise strength
  double F_noise = 0.0;      // feedback noise strength

  /// G_w(t) + G_r(t); pulses never overlap in the protocols we run, so a sum
  /// is exact there and a sane interpolation anywhere else.
  double coupling(double t) const;

  /// d/dt of the moment vector at (t, y).
  MomentState rhs(double t, const MomentState& y) const;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<MomentState> y;
};

struct IntegratorOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 = no cap
};

/// Adaptive Dormand-Prince 5(4) over `times` (strictly increasing). The
/// internal step is clipped so every requested time is hit exactly.
Trajectory integrate_moments(const MomentModel& model,
                             const std::vector<double>& times,
                             const MomentState& y0,
                             const IntegratorOptions& opt = {});

/// Generic driver for the same integrator, used by the covariance module.
using OdeRhs = std::function<void(double, const std::vector<double>&,
                                  std::vector<double>&)>;

std::vector<std::vector<double>> integrate_ode(
    const OdeRhs& rhs, const std::vector<double>& times,
    const std::vector<double>& y0, const IntegratorOptions& opt = {});

}  // namespace levmem
