#pragma once

#include "saddlewalk/geometry.hpp"

namespace saddlewalk {

/// Posture-dependent frame aligned with the principal directions of the
/// biped's potential-energy surface. The y axis runs from the right CoP to
/// the left CoP through the saddle point (their midpoint, the frame origin);
/// the x axis is perpendicular to it.
///
/// Frames are cheap value objects; build one per posture sample.
struct SaddleFrame {
  Vec2 origin;          // task-space midpoint of the CoP-CoP segment
  double angle;         // rad, task x axis to saddle x axis, in (-pi, pi]
  double cos_a, sin_a;  // cached rotation terms
  double slope;         // dy/dx of the CoP-CoP line; +inf when feet abreast
  double y_left;        // saddle-space y of the left CoP (> 0 by construction)
  double y_right;       // saddle-space y of the right CoP (< 0)
};

/// Throws PlanningError when the CoPs are closer than 1e-6 m (degenerate
/// posture, no principal direction).
SaddleFrame build_frame(Vec2 cop_left, Vec2 cop_right);

Vec2 to_saddle(Vec2 task_point, const SaddleFrame& frame);
Vec2 to_task(Vec2 saddle_point, const SaddleFrame& frame);

}  // namespace saddlewalk
