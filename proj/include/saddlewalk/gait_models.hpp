#pragma once

#include "saddlewalk/geometry.hpp"

namespace saddlewalk {

/// Fixed geometry of the biped. The leg is modelled as an inverted pendulum
/// of length 0.57 * body height; the foot rolls about pivots at distance
/// d_h = pivot_distance from the CoP.
struct AnthroProfile {
  double body_height;        // m
  double mass;               // kg
  double pendulum_length;    // m, 0.57 * body_height
  double pivot_distance;     // m, CoP to toe/heel pivot
  double natural_frequency;  // rad/s, sqrt(g / pendulum_length)
};

AnthroProfile make_profile(double body_height_m, double mass_kg,
                           double pivot_distance_m = 0.1);

/// Speed-parameterized gait geometry assembled from the regression models.
struct SpeedModels {
  double speed;               // m/s, the commanded walking speed
  double step_width;          // m
  double half_step_length;    // m, CoM travel per quarter phase
  double step_length;         // m, 2 * half_step_length
  double vertical_amplitude;  // m, target CoM vertical peak-to-peak
  double cadence;             // steps/s, speed / step_length
  double lateral_amplitude;   // m, mediolateral CoM amplitude
};

struct StepBounds {
  double half_step_min;  // m, XCoM limit: v / (2 * omega_n)
  double half_step_max;  // m, reach limit: max_reach_coef * pendulum_length
};

/// Default reach coefficient; the admissible-step window built from it
/// closes at a walking speed of about 3 m/s for the mean profile.
constexpr double kMaxReachCoef = 0.4742;

double step_width(double speed);
double step_length_half(double speed);
double vertical_amplitude(double speed);

/// Throws PlanningError when half_step_min >= half_step_max, i.e. no stable
/// walking step exists at this speed.
StepBounds step_bounds(double speed, const AnthroProfile& profile,
                       double max_reach_coef = kMaxReachCoef);

SpeedModels speed_models(double speed, const AnthroProfile& profile,
                         double max_reach_coef = kMaxReachCoef);

}  // namespace saddlewalk
