#include "saddlewalk/foot_plan.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

Vec2 swing_target(Vec2 stance_cop, double step_width, double slope, Side swing_side) {
  const double lateral = (swing_side == Side::Left) ? step_width : -step_width;
  double forward = 0.0;
  if (std::isinf(slope)) {
    forward = 0.0;  // feet abreast: landing straight across from the stance foot
  } else if (std::abs(slope) < 1e-6) {
    throw PlanningError("undefined swing target: CoM laterally level with the stance CoP");
  } else {
    forward = lateral / slope;
  }
  return {stance_cop.x + forward, stance_cop.y + lateral};
}

Vec3 swing_trajectory(double t, Vec3 lift, Vec3 land, double t_lift, double t_land,
                      double clearance) {
  if (!(t_lift < t_land)) throw std::invalid_argument("swing window must have t_lift < t_land");
  double s = (t - t_lift) / (t_land - t_lift);
  if (s < 0.0) s = 0.0;
  if (s > 1.0) s = 1.0;
  const double q = s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
  Vec3 p;
  p.x = lift.x + (land.x - lift.x) * q;
  p.y = lift.y + (land.y - lift.y) * q;
  p.z = lift.z + (land.z - lift.z) * s + clearance * std::sin(kPi * s);
  return p;
}

}  // namespace saddlewalk
