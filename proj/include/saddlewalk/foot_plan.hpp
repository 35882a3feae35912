#pragma once

#include "saddlewalk/geometry.hpp"

namespace saddlewalk {

struct FeetState {
  Vec2 cop_left;
  Vec2 cop_right;
  Side support = Side::Left;
  double swing_progress = 0.0;   // fraction of the current swing, [0, 1]
  double swing_clearance = 0.05; // m

  Vec2 stance_cop() const { return support == Side::Left ? cop_left : cop_right; }
  Vec2 swing_cop() const { return support == Side::Left ? cop_right : cop_left; }
};

/// Landing CoP for the swing foot: on the line through the stance CoP with
/// the given saddle-line slope, one step width to the swing side.
///
/// slope may be +inf (feet abreast -> landing straight across); values with
/// |slope| < 1e-6 are rejected (CoM laterally level with the stance CoP,
/// no defined crossing).
Vec2 swing_target(Vec2 stance_cop, double step_width, double slope, Side swing_side);

/// Swing foot position at time t: quintic (minimum-jerk) horizontal blend
/// from lift to land with zero boundary velocity and acceleration, plus a
/// half-sine vertical arch of the given clearance over the lift-land chord.
/// t outside [t_lift, t_land] clamps to the endpoints.
Vec3 swing_trajectory(double t, Vec3 lift, Vec3 land, double t_lift, double t_land,
                      double clearance);

}  // namespace saddlewalk
