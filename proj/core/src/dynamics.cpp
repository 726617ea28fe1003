#include "levmem/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "levmem/errors.hpp"

namespace levmem {

double MomentModel::coupling(double t) const {
  return write.envelope(t) + read.envelope(t);
}

MomentState MomentModel::rhs(double t, const MomentState& y) const {
  const double B = damping.at(t);
  const double G = coupling(t);
  const double I_in = signal.envelope(t);
  const double n_opt = y[0], n_mech = y[1], cr = y[2], ci = y[3];

  MomentState dy;
  dy[0] = -2.0 * B * n_opt - 2.0 * G * ci + 4.0 * B * I_in;
  dy[1] = -2.0 * Gamma * n_mech + 2.0 * G * ci + 2.0 * (gamma_noise + F_noise);
  // coherence c = <a b+>: dc/dt = -(i*Delta + B + Gamma) c + i G (n_opt - n_mech)
  dy[2] = -(B + Gamma) * cr + Delta * ci;
  dy[3] = -(B + Gamma) * ci - Delta * cr + G * (n_opt - n_mech);
  return dy;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

using Vec = std::vector<double>;

void axpy(Vec& out, const Vec& y, double h,
          std::initializer_list<std::pair<double, const Vec*>> terms) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    double s = 0.0;
    for (const auto& [coef, k] : terms) s += coef * (*k)[i];
    out[i] = y[i] + h * s;
  }
}

}  // namespace

std::vector<std::vector<double>> integrate_ode(const OdeRhs& rhs,
                                               const std::vector<double>& times,
                                               const std::vector<double>& y0,
                                               const IntegratorOptions& opt) {
  if (times.size() < 2) throw config_error("integrate_ode: need >= 2 times");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw config_error("integrate_ode: times must be strictly increasing");

  const std::size_t n = y0.size();
  std::vector<Vec> out;
  out.reserve(times.size());
  out.push_back(y0);

  Vec y = y0, ytmp(n), ynew(n), yerr(n);
  Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);

  double t = times.front();
  double h = (times.back() - times.front()) / 1000.0;
  if (opt.max_step > 0.0) h = std::min(h, opt.max_step);
  rhs(t, y, k1);
  bool k1_fresh = true;

  for (std::size_t seg = 1; seg < times.size(); ++seg) {
    const double t_end = times[seg];
    while (t < t_end) {
      double step = std::min(h, t_end - t);
      if (opt.max_step > 0.0) step = std::min(step, opt.max_step);

      if (!k1_fresh) rhs(t, y, k1);
      axpy(ytmp, y, step, {{a21, &k1}});
      rhs(t + c2 * step, ytmp, k2);
      axpy(ytmp, y, step, {{a31, &k1}, {a32, &k2}});
      rhs(t + c3 * step, ytmp, k3);
      axpy(ytmp, y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
      rhs(t + c4 * step, ytmp, k4);
      axpy(ytmp, y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
      rhs(t + c5 * step, ytmp, k5);
      axpy(ytmp, y, step,
           {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
      rhs(t + step, ytmp, k6);
      axpy(ynew, y, step, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      rhs(t + step, ynew, k7);

      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double e = step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                 e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double scale =
            opt.abs_tol +
            opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        err = std::max(err, std::abs(e) / scale);
      }

      if (err <= 1.0) {
        t += step;
        y.swap(ynew);
        k1.swap(k7);  // FSAL
        k1_fresh = true;
      } else {
        k1_fresh = true;  // k1 still valid at unchanged t
      }

      const double factor =
          std::clamp(0.9 * std::pow(std::max(err, 1e-300), -0.2), 0.2, 5.0);
      h = step * factor;
      if (!(h > 0.0) || !std::isfinite(h))
        throw numeric_error("integrate_ode: step size underflow");
    }
    out.push_back(y);
  }
  return out;
}

Trajectory integrate_moments(const MomentModel& model,
                             const std::vector<double>& times,
                             const MomentState& y0,
                             const IntegratorOptions& opt) {
  auto rhs = [&model](double t, const Vec& y, Vec& dy) {
    MomentState s{y[0], y[1], y[2], y[3]};
    MomentState d = model.rhs(t, s);
    std::copy(d.begin(), d.end(), dy.begin());
  };

  // Cap the step at a fraction of the narrowest pulse so short gaussians are
  // never stepped over during the long quiet stretch before them.
  IntegratorOptions local = opt;
  double narrow = std::min(model.write.width, model.read.width);
  if (model.signal.width > 0.0) narrow = std::min(narrow, model.signal.width);
  if (narrow > 0.0 && (local.max_step == 0.0 || local.max_step > narrow / 4.0))
    local.max_step = narrow / 4.0;

  Vec y0v(y0.begin(), y0.end());
  auto rows = integrate_ode(rhs, times, y0v, local);

  Trajectory traj;
  traj.t = times;
  traj.y.reserve(rows.size());
  for (const auto& r : rows) traj.y.push_back({r[0], r[1], r[2], r[3]});
  return traj;
}

}  // namespace levmem
