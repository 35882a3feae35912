#pragma once

#include <vector>

#include "saddlewalk/ankle.hpp"
#include "saddlewalk/bos.hpp"
#include "saddlewalk/com_plan.hpp"
#include "saddlewalk/energy.hpp"
#include "saddlewalk/foot_plan.hpp"
#include "saddlewalk/gait_models.hpp"
#include "saddlewalk/stability.hpp"

namespace saddlewalk {

/// Everything a walk needs. Angles in radians, lengths in metres.
struct GaitRequest {
  double speed = 1.0;                     // m/s
  double heel_strike_angle = 0.17453292519943295;  // rad (10 deg)
  int steps = 2;                          // landings to plan; 2 steps = 1 stride
  double body_height = 1.79;              // m
  double mass = 63.3;                     // kg
  double dt = 0.080;                      // s
  Vec2 cop_left{0.0, 0.0664};             // initial feet
  Vec2 cop_right{0.0, -0.0664};
  Side first_support = Side::Left;        // applies when the feet start abreast
  double swing_clearance = 0.05;          // m
  double work_budget = 31.65;             // J, Max(W); default 0.5 J/kg * mean mass
  double pivot_distance = 0.1;            // m
  double max_reach_coef = kMaxReachCoef;
  bool ankle_strategies = true;           // false = rigid-pendulum baseline
  double perturbation_energy = 0.0;       // J, E_p added in the energy checks
};

struct InitialState {
  double phi0;                // rad, gait phase at t = 0
  double natural_frequency;   // rad/s
  SpeedModels models;
  AnthroProfile profile;
  StepBounds bounds;
  Vec2 com_origin;            // CoM start x and the walking-axis lateral offset
  Side support0;
  double t_first_exchange;    // s
};

/// Phase_0, the pendulum frequency and the speed models from the request.
/// Throws PlanningError for postures no gait phase can start from.
InitialState derive_initial_state(const GaitRequest& request);

/// One support phase of the schedule.
struct StepPlan {
  double t_begin = 0.0;
  double t_end = 0.0;          // exchange instant (or walk end for the tail)
  double t_apex = 0.0;         // lateral apex inside the phase; also lift-off
  Side support = Side::Left;
  Vec2 stance;
  Vec2 trailing;               // the other foot's planted position at t_begin
  bool has_landing = false;
  Vec2 landing;
  double t_land = 0.0;         // landing instant (the event's heel strike)
  AnkleEvent event;            // hand-off event at t_end
  bool has_prev_event = false;
  AnkleEvent prev_event;       // the event that made this stance the support
  double measured_half_step = 0.0;
  double s_pendulum = 1.0;     // step metrics, constant over the phase
  double s_jump = 1.0;
};

struct PlanSample {
  double t = 0.0;
  Vec3 com;
  Vec2 cop_left, cop_right;
  GaitPhase phase{0, Side::Left};
  double theta_toe_off = 0.0;      // rad
  double theta_heel_strike = 0.0;  // rad
  double support_length = 0.0;     // m, effective pendulum length in use
  double s_step_pendulum = 1.0;
  double s_step_jump = 1.0;
  double s_step_width = 1.0;
  bool in_bos = true;
  double potential = 0.0;  // J
  double kinetic = 0.0;    // J
  bool capture_instant = true;
  bool capture_expected = true;
  double lyapunov_margin = 0.0;  // J, vs the previous sample
  bool energy_rate_ok = true;
};

struct StabilityReport {
  double min_step_pendulum = 1.0;
  double min_step_jump = 1.0;
  double min_step_width = 1.0;
  double bos_containment = 1.0;  // fraction of samples inside the instantaneous BoS
  double vertical_p2p = 0.0;     // m, achieved CoM vertical excursion
  double vertical_target = 0.0;  // m
  double vertical_rel_error = 0.0;
  double capture_instant_fraction = 1.0;
  double capture_expected_fraction = 1.0;
  bool expected_capture_at_boundaries = true;
  double min_lyapunov_margin = 0.0;  // J
  int energy_rate_violations = 0;
  int sample_count = 0;
  double plan_seconds = 0.0;  // wall time; excluded from serialized CSVs
};

struct TrajectoryLog {
  GaitRequest request;
  InitialState init;
  std::vector<StepPlan> schedule;
  std::vector<ViaPointSet> strides;  // via points of each complete stride
  std::vector<PlanSample> samples;
  StabilityReport report;
};

enum class Exec { Serial, Parallel };

/// Plans the requested number of steps: per step the via points, hand-off
/// event, swing target and per-dt samples, then the aggregated stability
/// report. Deterministic: identical requests give identical logs under
/// either execution policy. Module errors carry the step index and time.
TrajectoryLog plan_walk(const GaitRequest& request, Exec exec = Exec::Parallel);

}  // namespace saddlewalk
