#include "saddlewalk/ankle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

double chord_elongation(double theta, double pivot_distance) {
  if (theta < 0.0 || theta > kPi) {
    throw std::invalid_argument("foot roll angle must lie in [0, pi]");
  }
  return 2.0 * pivot_distance * std::sin(0.5 * theta);
}

AnkleEvent ankle_event(const SpeedModels& models, const AnthroProfile& profile,
                       double t0, const std::function<Vec2(double)>& com_at,
                       Vec2 cop0, double max_theta_hs) {
  const double d = profile.pivot_distance;
  AnkleEvent ev;
  ev.max_theta_hs = max_theta_hs;
  ev.t_exchange = t0 + 1.0 / (2.0 * models.cadence);
  ev.t_heel_strike = ev.t_exchange - d * (1.0 - std::cos(max_theta_hs)) / models.speed;

  // Length the support leg needs at the heel strike so the CoM sits one
  // vertical amplitude below the upright pendulum.
  const Vec2 com = com_at(ev.t_heel_strike);
  const double dx = com.x - cop0.x;
  const double dy = com.y - cop0.y;
  const double target_z = profile.pendulum_length - models.vertical_amplitude;
  ev.required_length = std::sqrt(target_z * target_z + dx * dx + dy * dy);

  const double elongation = ev.required_length - profile.pendulum_length;
  const double arg = elongation / (2.0 * d);
  if (arg > 1.0) {
    std::ostringstream msg;
    msg << "unreachable elongation: the requested vertical amplitude needs "
        << elongation << " m of pendulum lengthening, beyond the 2*" << d
        << " m chord the foot geometry allows";
    throw PlanningError(msg.str());
  }
  ev.max_theta_to = 2.0 * std::asin(arg < 0.0 ? 0.0 : arg);

  // The landing leg decays from an amplitude chosen so both chords coincide
  // at the exchange instant, handing the CoM over without a height jump.
  const double u = (ev.t_exchange - ev.t_heel_strike) / kAnkleTau;
  const double theta_to_at_exchange = ev.max_theta_to * (1.0 + std::erf(u));
  ev.hs_length_theta = theta_to_at_exchange / (1.0 - std::erf(u));
  return ev;
}

AnkleAngles ankle_angles(double t, const AnkleEvent& ev) {
  const double e = std::erf((t - ev.t_heel_strike) / ev.tau);
  return {ev.max_theta_to * (1.0 + e), ev.max_theta_hs * (1.0 - e)};
}

double pendulum_length(double t, AnkleRole role, const AnkleEvent& ev,
                       const AnthroProfile& profile) {
  const double dt = t - ev.t_heel_strike;
  double theta = 0.0;
  if (role == AnkleRole::ToeOff) {
    // rises toward the exchange; quiet before the window opens
    if (dt >= -kAnkleWindow) theta = ev.max_theta_to * (1.0 + std::erf(dt / ev.tau));
  } else {
    // decays after the strike; quiet once the window closes
    if (dt <= kAnkleWindow) theta = ev.hs_length_theta * (1.0 - std::erf(dt / ev.tau));
  }
  return profile.pendulum_length + chord_elongation(theta, profile.pivot_distance);
}

}  // namespace saddlewalk
