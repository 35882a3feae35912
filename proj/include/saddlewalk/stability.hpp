#pragma once

#include "saddlewalk/gait_models.hpp"

namespace saddlewalk {

/// Normalized step metrics. Both ratios are 1 when the measured half step
/// matches the desired one and reach 0 at the respective stability border
/// (XCoM bound for the pendulum metric, reach bound for the jump metric).
struct StepStability {
  double pendulum;  // S against the XCoM lower bound
  double jump;      // S against the max-reach upper bound
};

/// measured_half_step is the anteroposterior CoM travel from the stance CoP
/// over the phase. Throws PlanningError when the desired half step sits on
/// one of its bounds (degenerate normalization window).
StepStability step_stability(double measured_half_step, double speed,
                             const SpeedModels& models, const StepBounds& bounds);

/// Mediolateral metric: 1 at the walking axis, 0 when the CoM is laterally
/// level with a CoP, negative outside the CoP-CoP band. y_com is measured
/// from the walking axis.
double ml_stability(double y_com, double speed, const SpeedModels& models);

}  // namespace saddlewalk
