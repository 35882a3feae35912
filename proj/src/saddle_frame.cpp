#include "saddlewalk/saddle_frame.hpp"

#include <cmath>
#include <limits>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

SaddleFrame build_frame(Vec2 cop_left, Vec2 cop_right) {
  const Vec2 diff = cop_left - cop_right;
  const double separation = diff.norm();
  if (separation <= 1e-6) {
    throw PlanningError("degenerate posture: the two CoPs coincide");
  }
  SaddleFrame f;
  f.origin = midpoint(cop_left, cop_right);
  // Saddle y axis points from the right CoP to the left CoP. The x axis is
  // that direction rotated by -90 degrees, so left lands on positive y.
  const Vec2 axis_y{diff.x / separation, diff.y / separation};
  const Vec2 axis_x{axis_y.y, -axis_y.x};
  f.angle = std::atan2(axis_x.y, axis_x.x);
  f.cos_a = axis_x.x;
  f.sin_a = axis_x.y;
  f.slope = (diff.x == 0.0) ? std::numeric_limits<double>::infinity() : diff.y / diff.x;
  f.y_left = 0.5 * separation;
  f.y_right = -0.5 * separation;
  return f;
}

Vec2 to_saddle(Vec2 task_point, const SaddleFrame& f) {
  const Vec2 d = task_point - f.origin;
  return {f.cos_a * d.x + f.sin_a * d.y, -f.sin_a * d.x + f.cos_a * d.y};
}

Vec2 to_task(Vec2 saddle_point, const SaddleFrame& f) {
  return {f.cos_a * saddle_point.x - f.sin_a * saddle_point.y + f.origin.x,
          f.sin_a * saddle_point.x + f.cos_a * saddle_point.y + f.origin.y};
}

}  // namespace saddlewalk
