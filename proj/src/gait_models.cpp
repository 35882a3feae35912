#include "saddlewalk/gait_models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

namespace {
void require_speed(double speed) {
  if (!(speed > 0.0)) throw std::invalid_argument("walking speed must be positive");
}
}  // namespace

AnthroProfile make_profile(double body_height_m, double mass_kg, double pivot_distance_m) {
  if (!(body_height_m > 0.0)) throw std::invalid_argument("body height must be positive");
  if (!(mass_kg > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(pivot_distance_m > 0.0)) throw std::invalid_argument("pivot distance must be positive");
  AnthroProfile p;
  p.body_height = body_height_m;
  p.mass = mass_kg;
  p.pendulum_length = 0.57 * body_height_m;
  p.pivot_distance = pivot_distance_m;
  p.natural_frequency = std::sqrt(kGravity / p.pendulum_length);
  return p;
}

double step_width(double speed) {
  require_speed(speed);
  if (speed < 0.6) return 0.22;
  if (speed > 1.1) return 0.10;
  return -0.2128 * speed + 0.3456;
}

double step_length_half(double speed) {
  require_speed(speed);
  return 0.1802 * speed + 0.1351;
}

double vertical_amplitude(double speed) {
  require_speed(speed);
  return 0.02656 * speed + 0.002575;
}

StepBounds step_bounds(double speed, const AnthroProfile& profile, double max_reach_coef) {
  require_speed(speed);
  StepBounds b;
  b.half_step_min = speed / (2.0 * profile.natural_frequency);
  b.half_step_max = max_reach_coef * profile.pendulum_length;
  if (b.half_step_min >= b.half_step_max) {
    std::ostringstream msg;
    msg << "no stable walking step exists at " << speed
        << " m/s: XCoM bound " << b.half_step_min << " m >= reach bound "
        << b.half_step_max << " m";
    throw PlanningError(msg.str());
  }
  return b;
}

SpeedModels speed_models(double speed, const AnthroProfile& profile, double max_reach_coef) {
  step_bounds(speed, profile, max_reach_coef);  // reject speeds past the window closure
  SpeedModels m;
  m.speed = speed;
  m.step_width = step_width(speed);
  m.half_step_length = step_length_half(speed);
  m.step_length = 2.0 * m.half_step_length;
  m.vertical_amplitude = vertical_amplitude(speed);
  m.cadence = speed / m.step_length;
  m.lateral_amplitude = m.step_width / (2.0 * kPi);
  return m;
}

}  // namespace saddlewalk
