#pragma once

#include <functional>

#include "saddlewalk/gait_models.hpp"
#include "saddlewalk/geometry.hpp"

namespace saddlewalk {

/// Time constant of the erf-shaped ankle angle transitions, seconds.
constexpr double kAnkleTau = 0.11;

/// Half-width of the window in which an ankle strategy is active, seconds.
/// Outside it the erf tails are truncated to their asymptotes.
constexpr double kAnkleWindow = 3.0 * kAnkleTau;

/// One toe-off/heel-strike hand-off event, centred at the heel strike.
struct AnkleEvent {
  double t_heel_strike;      // s, sigmoid centre
  double max_theta_hs;       // rad, heel-strike angle (input)
  double max_theta_to;       // rad, toe-off angle solved from the elongation
  double required_length;    // m, pendulum length the support leg needs at t_heel_strike
  double hs_length_theta;    // rad, angle amplitude driving the landing leg's
                             // elongation decay; matched so both legs have the
                             // same length at the support exchange
  double t_exchange;         // s, nominal support-exchange instant
  double tau = kAnkleTau;    // s
};

/// Pendulum elongation produced by rolling the foot to angle theta about a
/// pivot at distance pivot_distance from the CoP: the chord 2*d*sin(theta/2).
double chord_elongation(double theta, double pivot_distance);

enum class AnkleRole { ToeOff, HeelStrike };

/// Builds the hand-off event for the transition ending the phase that starts
/// at t0. com_at evaluates the planned transverse CoM trajectory; cop0 is the
/// stance CoP before toe-off. Throws PlanningError when the requested
/// vertical amplitude needs more elongation than the foot geometry allows.
AnkleEvent ankle_event(const SpeedModels& models, const AnthroProfile& profile,
                       double t0, const std::function<Vec2(double)>& com_at,
                       Vec2 cop0, double max_theta_hs);

/// Foot-sole angle trajectories of the two strategies around the event.
struct AnkleAngles {
  double toe_off;      // rad
  double heel_strike;  // rad
};
AnkleAngles ankle_angles(double t, const AnkleEvent& ev);

/// Effective pendulum length of the leg playing `role` in the event:
/// base length plus the windowed chord elongation.
double pendulum_length(double t, AnkleRole role, const AnkleEvent& ev,
                       const AnthroProfile& profile);

}  // namespace saddlewalk
