#pragma once

#include "saddlewalk/foot_plan.hpp"
#include "saddlewalk/gait_models.hpp"
#include "saddlewalk/geometry.hpp"

namespace saddlewalk {

/// One quarter of the 2*pi mediolateral cycle. Quarters are named after the
/// via points they connect; support is on the left leg for the quarters
/// starting at phase 3*pi/2 and 0, on the right leg for pi/2 and pi.
struct GaitPhase {
  int quarter;   // 0..3, phase offset = quarter * pi/2
  Side support;

  const char* label() const;
  double phase_offset() const { return quarter * (kPi / 2.0); }
};

GaitPhase phase_at(double t, double phi0, double cadence);

/// Transverse CoM position: constant-speed advance along x, harmonic
/// mediolateral oscillation around the walking axis.
Vec2 com_transverse(double t, const SpeedModels& models, double phi,
                    Vec2 origin = {0.0, 0.0});

/// Pendulum-constrained CoM height over the support CoP. Throws
/// PlanningError (naming t) when the horizontal CoM-CoP distance reaches
/// the pendulum length.
double com_vertical(double t, Vec2 com_xy, Vec2 support_cop, double pendulum_length);

struct ViaPoint {
  double t = 0.0;
  Vec2 position;
};

/// The four waypoints structuring one stride: two lateral apexes (foot via
/// points) and two saddle crossings where support changes hands.
struct ViaPointSet {
  ViaPoint left_foot;
  ViaPoint left_saddle;   // left-to-right transition
  ViaPoint right_foot;
  ViaPoint right_saddle;  // right-to-left transition
};

/// Via points of the stride starting at time t0, with the biped at the
/// support-side lateral apex and both feet planted at the given CoPs.
/// axis_y is the walking-axis lateral offset.
ViaPointSet via_points(const FeetState& feet, const SpeedModels& models,
                       const AnthroProfile& profile, double t0 = 0.0,
                       double axis_y = 0.0);

}  // namespace saddlewalk
