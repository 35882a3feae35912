#pragma once

#include <vector>

#include "saddlewalk/geometry.hpp"
#include "saddlewalk/saddle_frame.hpp"

namespace saddlewalk {

/// Base of Support in saddle coordinates: per half-plane, the disc around
/// the saddle point whose radius reaches the CoP on that side, clipped to
/// the strip |x_s| <= cap. The strip width is the CoP's range of motion
/// within the foot. Closed set: boundary points count as contained.
///
/// See the README for a sketch of the region.
struct BosRegion {
  SaddleFrame frame;
  double radius_left;   // m, |saddle y of the left CoP|
  double radius_right;  // m, |saddle y of the right CoP|
  double cap;           // m, half-width of the strip (d_h)
};

BosRegion make_bos(const SaddleFrame& frame, double cap);
BosRegion make_bos(Vec2 cop_left, Vec2 cop_right, double cap);

bool bos_contains(Vec2 task_point, const BosRegion& region);

/// n >= 8 task-space points tracing the region boundary counterclockwise
/// (two arcs and, when the strip clips them, two cap segments). The polyline
/// closes implicitly from the last point back to the first.
std::vector<Vec2> bos_boundary(const BosRegion& region, int n);

/// Closest boundary point to a saddle-space location; used as the expected
/// margin-of-stability crossing for the energy conditions.
Vec2 nearest_border_saddle(Vec2 saddle_point, const BosRegion& region);

/// Signed distance to the boundary in saddle coordinates: positive inside.
double boundary_distance_saddle(Vec2 saddle_point, const BosRegion& region);

}  // namespace saddlewalk
