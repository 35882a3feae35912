#include "saddlewalk/com_plan.hpp"

#include <cmath>
#include <sstream>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

const char* GaitPhase::label() const {
  static const char* kLabels[4] = {"LFvp-LSvp", "LSvp-RFvp", "RFvp-RSvp", "RSvp-LFvp"};
  return kLabels[quarter & 3];
}

GaitPhase phase_at(double t, double phi0, double cadence) {
  double phase = std::fmod(kPi * cadence * t + phi0, 2.0 * kPi);
  if (phase < 0.0) phase += 2.0 * kPi;
  int quarter = static_cast<int>(phase / (kPi / 2.0));
  if (quarter > 3) quarter = 3;
  GaitPhase g;
  g.quarter = quarter;
  g.support = (quarter == 0 || quarter == 3) ? Side::Left : Side::Right;
  return g;
}

Vec2 com_transverse(double t, const SpeedModels& m, double phi, Vec2 origin) {
  return {origin.x + m.speed * t,
          origin.y + m.lateral_amplitude * std::cos(kPi * m.cadence * t + phi)};
}

double com_vertical(double t, Vec2 com_xy, Vec2 support_cop, double pendulum_length) {
  const double dx = com_xy.x - support_cop.x;
  const double dy = com_xy.y - support_cop.y;
  const double rest = pendulum_length * pendulum_length - dx * dx - dy * dy;
  if (rest <= 0.0) {
    std::ostringstream msg;
    msg << "pendulum overextension at t=" << t << " s: horizontal CoM-CoP distance "
        << std::sqrt(dx * dx + dy * dy) << " m reaches the pendulum length "
        << pendulum_length << " m";
    throw PlanningError(msg.str());
  }
  return std::sqrt(rest);
}

ViaPointSet via_points(const FeetState& feet, const SpeedModels& m,
                       const AnthroProfile& profile, double t0, double axis_y) {
  (void)profile;
  const double quarter = 1.0 / (2.0 * m.cadence);
  const Vec2 stance = feet.stance_cop();
  const double apex_dy = (feet.support == Side::Left) ? m.lateral_amplitude
                                                      : -m.lateral_amplitude;

  ViaPoint fvp1{t0, {stance.x, axis_y + apex_dy}};

  // First transition: the CoM crosses the walking axis one quarter period
  // later; the swing foot lands on the line through the stance CoP and that
  // crossing point, one step width across.
  const double t1 = t0 + quarter;
  const Vec2 com1{stance.x + m.speed * quarter, axis_y};
  const double slope1 = (com1.y - stance.y) / (com1.x - stance.x);
  const Vec2 land1 = swing_target(stance, m.step_width, slope1, other_side(feet.support));
  ViaPoint svp1{t1, midpoint(stance, land1)};

  ViaPoint fvp2{t0 + 2.0 * quarter, {land1.x, axis_y - apex_dy}};

  const double t3 = t0 + 3.0 * quarter;
  const Vec2 com2{land1.x + m.speed * quarter, axis_y};
  const double slope2 = (com2.y - land1.y) / (com2.x - land1.x);
  const Vec2 land2 = swing_target(land1, m.step_width, slope2, feet.support);
  ViaPoint svp2{t3, midpoint(land1, land2)};

  ViaPointSet set;
  if (feet.support == Side::Left) {
    set.left_foot = fvp1;
    set.left_saddle = svp1;
    set.right_foot = fvp2;
    set.right_saddle = svp2;
  } else {
    set.right_foot = fvp1;
    set.right_saddle = svp1;
    set.left_foot = fvp2;
    set.left_saddle = svp2;
  }
  return set;
}

}  // namespace saddlewalk
