#include "saddlewalk/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "saddlewalk/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace saddlewalk {

namespace {

constexpr double kAbreastTol = 1e-9;

void validate(const GaitRequest& r) {
  if (!(r.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (r.steps < 1) throw std::invalid_argument("at least one step must be planned");
  if (!(r.heel_strike_angle > 0.0) || r.heel_strike_angle > kPi / 6.0) {
    throw std::invalid_argument("heel-strike angle must lie in (0, 30] degrees");
  }
  if (!(r.swing_clearance >= 0.0)) throw std::invalid_argument("swing clearance must be >= 0");
}

}  // namespace

InitialState derive_initial_state(const GaitRequest& r) {
  validate(r);
  InitialState s;
  s.profile = make_profile(r.body_height, r.mass, r.pivot_distance);
  s.models = speed_models(r.speed, s.profile, r.max_reach_coef);
  s.bounds = step_bounds(r.speed, s.profile, r.max_reach_coef);
  s.natural_frequency = s.profile.natural_frequency;

  const Vec2 sep = r.cop_left - r.cop_right;
  if (sep.norm() <= 1e-6) {
    throw PlanningError("invalid initial posture: the two CoPs coincide");
  }
  const double stagger = std::abs(sep.x);
  if (stagger > 2.0 * s.bounds.half_step_max) {
    std::ostringstream msg;
    msg << "invalid initial posture: feet staggered by " << stagger
        << " m, beyond the reachable step of " << 2.0 * s.bounds.half_step_max << " m";
    throw PlanningError(msg.str());
  }

  const Vec2 mid = midpoint(r.cop_left, r.cop_right);
  if (stagger <= kAbreastTol) {
    // Feet abreast: the walk starts at the support side's lateral apex.
    s.support0 = r.first_support;
    s.phi0 = (s.support0 == Side::Left) ? 0.0 : kPi;
    s.com_origin = {r.cop_left.x, mid.y};
    s.t_first_exchange = 1.0 / (2.0 * s.models.cadence);
  } else {
    // Staggered feet match the posture right after a support exchange: the
    // CoM starts over the saddle point, loaded on the leading foot.
    s.support0 = (sep.x > 0.0) ? Side::Left : Side::Right;
    s.phi0 = (s.support0 == Side::Right) ? kPi / 2.0 : 3.0 * kPi / 2.0;
    s.com_origin = mid;
    s.t_first_exchange = 1.0 / s.models.cadence;
  }
  return s;
}

namespace {

struct Walk {
  GaitRequest request;
  InitialState init;
  std::vector<StepPlan> schedule;
  double duration = 0.0;
  double work_rate = 0.0;  // J/s, declared active-work rate for the energy check

  Vec2 com_xy(double t) const {
    return com_transverse(t, init.models, init.phi0, init.com_origin);
  }

  const StepPlan& locate(double t) const {
    auto it = std::upper_bound(schedule.begin(), schedule.end(), t,
                               [](double v, const StepPlan& p) { return v < p.t_begin; });
    return it == schedule.begin() ? schedule.front() : *(it - 1);
  }
};

std::vector<StepPlan> build_schedule(const GaitRequest& r, const InitialState& init,
                                     double duration) {
  const SpeedModels& m = init.models;
  const double half_phase = 1.0 / (2.0 * m.cadence);
  std::vector<StepPlan> plans;
  plans.reserve(r.steps + 1);

  Side support = init.support0;
  Vec2 stance = (support == Side::Left) ? r.cop_left : r.cop_right;
  Vec2 trailing = (support == Side::Left) ? r.cop_right : r.cop_left;
  double t_begin = 0.0;
  bool have_prev = false;
  AnkleEvent prev_event{};

  for (int k = 0; k < r.steps; ++k) {
    const double t_exchange = init.t_first_exchange + k / m.cadence;
    StepPlan p;
    p.t_begin = t_begin;
    p.t_end = t_exchange;
    p.t_apex = t_exchange - half_phase;  // equals t_begin for the leading half phase
    p.support = support;
    p.stance = stance;
    p.trailing = trailing;
    p.has_landing = true;
    p.has_prev_event = have_prev;
    p.prev_event = prev_event;

    try {
      const Vec2 com_land = com_transverse(t_exchange, m, init.phi0, init.com_origin);
      double slope;
      if (com_land.x == stance.x) {
        slope = std::numeric_limits<double>::infinity();
      } else {
        slope = (com_land.y - stance.y) / (com_land.x - stance.x);
      }
      p.landing = swing_target(stance, m.step_width, slope, other_side(support));

      const double theta_hs = r.ankle_strategies ? r.heel_strike_angle : 0.0;
      p.event = ankle_event(
          m, init.profile, t_exchange - half_phase,
          [&](double t) { return com_transverse(t, m, init.phi0, init.com_origin); },
          stance, theta_hs);
      p.t_land = p.event.t_heel_strike;

      p.measured_half_step = com_land.x - stance.x;
      const StepStability s =
          step_stability(p.measured_half_step, m.speed, m, init.bounds);
      p.s_pendulum = s.pendulum;
      p.s_jump = s.jump;
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "step " << (k + 1) << " (t=" << t_exchange << " s): " << e.what();
      throw PlanningError(msg.str());
    }

    plans.push_back(p);
    prev_event = p.event;
    have_prev = r.ankle_strategies;
    trailing = stance;
    stance = p.landing;
    support = other_side(support);
    t_begin = t_exchange;
  }

  // Tail phase after the last landing (empty when the walk ends on it).
  StepPlan tail;
  tail.t_begin = t_begin;
  tail.t_end = duration;
  tail.t_apex = std::min(t_begin + 1.0 / (2.0 * m.cadence), duration);
  tail.support = support;
  tail.stance = stance;
  tail.trailing = trailing;
  tail.has_landing = false;
  tail.has_prev_event = have_prev;
  tail.prev_event = prev_event;
  tail.measured_half_step = m.half_step_length;
  plans.push_back(tail);
  return plans;
}

double support_length_at(double t, const StepPlan& p, const GaitRequest& r,
                         const AnthroProfile& profile) {
  if (!r.ankle_strategies) return profile.pendulum_length;
  double len = profile.pendulum_length;
  if (p.has_prev_event) {
    len += pendulum_length(t, AnkleRole::HeelStrike, p.prev_event, profile) -
           profile.pendulum_length;
  }
  if (p.has_landing) {
    len += pendulum_length(t, AnkleRole::ToeOff, p.event, profile) -
           profile.pendulum_length;
  }
  return len;
}

void swing_cops(double t, const StepPlan& p, const GaitRequest& r, Vec2* left, Vec2* right) {
  Vec2 sw;
  if (!p.has_landing || t < p.t_apex) {
    sw = p.trailing;
  } else if (t >= p.t_land) {
    sw = p.landing;
  } else {
    const Vec3 lift{p.trailing.x, p.trailing.y, 0.0};
    const Vec3 land{p.landing.x, p.landing.y, 0.0};
    const Vec3 q = swing_trajectory(t, lift, land, p.t_apex, p.t_land, r.swing_clearance);
    sw = {q.x, q.y};
  }
  if (p.support == Side::Left) {
    *left = p.stance;
    *right = sw;
  } else {
    *left = sw;
    *right = p.stance;
  }
}

GaitPhase phase_of(double t, const StepPlan& p) {
  GaitPhase g;
  g.support = p.support;
  const bool first_half = t < p.t_apex;
  if (p.support == Side::Left) {
    g.quarter = first_half ? 3 : 0;
  } else {
    g.quarter = first_half ? 1 : 2;
  }
  return g;
}

PlanSample compute_sample(double t, const Walk& w) {
  const StepPlan& p = w.locate(t);
  const SpeedModels& m = w.init.models;

  PlanSample s;
  s.t = t;
  const Vec2 xy = w.com_xy(t);
  s.support_length = support_length_at(t, p, w.request, w.init.profile);
  const double z = com_vertical(t, xy, p.stance, s.support_length);
  s.com = {xy.x, xy.y, z};
  swing_cops(t, p, w.request, &s.cop_left, &s.cop_right);
  s.phase = phase_of(t, p);

  if (w.request.ankle_strategies) {
    if (p.has_landing && t - p.event.t_heel_strike >= -kAnkleWindow) {
      s.theta_toe_off = ankle_angles(t, p.event).toe_off;
    }
    if (p.has_prev_event && t - p.prev_event.t_heel_strike <= kAnkleWindow) {
      s.theta_heel_strike = ankle_angles(t, p.prev_event).heel_strike;
    }
  }

  s.s_step_pendulum = p.s_pendulum;
  s.s_step_jump = p.s_jump;
  s.s_step_width = ml_stability(xy.y - w.init.com_origin.y, m.speed, m);

  const BosRegion region = make_bos(s.cop_left, s.cop_right, w.request.pivot_distance);
  s.in_bos = bos_contains(xy, region);
  return s;
}

double mos_potential(Vec2 com_xy, Vec2 stance, const BosRegion& region,
                     const AnthroProfile& profile) {
  const Vec2 border_s = nearest_border_saddle(to_saddle(com_xy, region.frame), region);
  const Vec2 border = to_task(border_s, region.frame);
  const double d = (border - stance).norm();
  const double lp = profile.pendulum_length;
  const double z = std::sqrt(std::max(0.0, lp * lp - d * d));
  return profile.mass * kGravity * z;
}

void energy_pass(Walk& w, std::vector<PlanSample>& samples, StabilityReport& rep) {
  const GaitRequest& r = w.request;
  const AnthroProfile& profile = w.init.profile;
  std::vector<Vec3> com(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) com[i] = samples[i].com;

  auto states = energy_series(com, r.dt, profile, r.work_budget, r.perturbation_energy);
  const double k_des = 0.5 * profile.mass * r.speed * r.speed;
  for (auto& e : states) e.desired_kinetic = k_des;

  for (std::size_t i = 0; i < samples.size(); ++i) {
    PlanSample& s = samples[i];
    const StepPlan& p = w.locate(s.t);
    s.potential = states[i].potential;
    s.kinetic = states[i].kinetic;

    EnergyState inst = states[i];
    const BosRegion instant = make_bos(s.cop_left, s.cop_right, r.pivot_distance);
    inst.mos_potential = mos_potential(s.com.xy(), p.stance, instant, profile);
    s.capture_instant = static_capture(inst);

    EnergyState expected = states[i];
    const Vec2 next = p.has_landing ? p.landing : p.trailing;
    const BosRegion ebos = make_bos(p.support == Side::Left ? p.stance : next,
                                    p.support == Side::Left ? next : p.stance,
                                    r.pivot_distance);
    expected.mos_potential = mos_potential(s.com.xy(), p.stance, ebos, profile);
    s.capture_expected = static_capture(expected);

    s.lyapunov_margin = (i == 0) ? lyapunov_margin(states[0], states[0], r.work_budget)
                                 : lyapunov_margin(states[i - 1], states[i], r.work_budget);
  }

  const auto ok = energy_rate_check(states, r.dt, w.work_rate);
  int violations = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i].energy_rate_ok = ok[i];
    if (!ok[i]) ++violations;
  }
  rep.energy_rate_violations = violations;
}

std::vector<ViaPointSet> stride_via_points(const Walk& w) {
  struct Event {
    double t;
    Vec2 pos;
    bool apex;
    Side support;
  };
  const SpeedModels& m = w.init.models;
  const double ay = m.lateral_amplitude;
  std::vector<Event> events;
  for (const StepPlan& p : w.schedule) {
    const double apex_y = w.init.com_origin.y + (p.support == Side::Left ? ay : -ay);
    if (p.t_apex < p.t_end || !p.has_landing) {
      events.push_back({p.t_apex, {p.stance.x, apex_y}, true, p.support});
    }
    if (p.has_landing) {
      events.push_back({p.t_end, midpoint(p.stance, p.landing), false, p.support});
    }
  }
  std::vector<ViaPointSet> strides;
  for (std::size_t i = 0; i + 3 < events.size(); i += 4) {
    if (!events[i].apex) break;  // stride sets start at a lateral apex
    ViaPointSet set;
    ViaPoint fvp1{events[i].t, events[i].pos};
    ViaPoint svp1{events[i + 1].t, events[i + 1].pos};
    ViaPoint fvp2{events[i + 2].t, events[i + 2].pos};
    ViaPoint svp2{events[i + 3].t, events[i + 3].pos};
    if (events[i].support == Side::Left) {
      set.left_foot = fvp1;
      set.left_saddle = svp1;
      set.right_foot = fvp2;
      set.right_saddle = svp2;
    } else {
      set.right_foot = fvp1;
      set.right_saddle = svp1;
      set.left_foot = fvp2;
      set.left_saddle = svp2;
    }
    strides.push_back(set);
  }
  return strides;
}

void aggregate(const Walk& w, TrajectoryLog& log) {
  StabilityReport& rep = log.report;
  rep.sample_count = static_cast<int>(log.samples.size());
  double zmin = std::numeric_limits<double>::max();
  double zmax = -zmin;
  int inside = 0;
  int capture_i = 0;
  int capture_e = 0;
  rep.min_step_width = std::numeric_limits<double>::max();
  rep.min_lyapunov_margin = std::numeric_limits<double>::max();
  for (const PlanSample& s : log.samples) {
    zmin = std::min(zmin, s.com.z);
    zmax = std::max(zmax, s.com.z);
    rep.min_step_width = std::min(rep.min_step_width, s.s_step_width);
    rep.min_lyapunov_margin = std::min(rep.min_lyapunov_margin, s.lyapunov_margin);
    if (s.in_bos) ++inside;
    if (s.capture_instant) ++capture_i;
    if (s.capture_expected) ++capture_e;
  }
  rep.min_step_pendulum = std::numeric_limits<double>::max();
  rep.min_step_jump = std::numeric_limits<double>::max();
  for (const StepPlan& p : w.schedule) {
    if (!p.has_landing) continue;
    rep.min_step_pendulum = std::min(rep.min_step_pendulum, p.s_pendulum);
    rep.min_step_jump = std::min(rep.min_step_jump, p.s_jump);
  }
  if (rep.min_step_pendulum == std::numeric_limits<double>::max()) {
    rep.min_step_pendulum = 1.0;
    rep.min_step_jump = 1.0;
  }
  const double n = static_cast<double>(std::max<std::size_t>(log.samples.size(), 1));
  rep.bos_containment = inside / n;
  rep.capture_instant_fraction = capture_i / n;
  rep.capture_expected_fraction = capture_e / n;
  rep.vertical_p2p = zmax - zmin;
  rep.vertical_target = w.init.models.vertical_amplitude;
  rep.vertical_rel_error =
      std::abs(rep.vertical_p2p - rep.vertical_target) / rep.vertical_target;

  // E-BoS sufficiency at the phase boundaries, read off the nearest samples.
  rep.expected_capture_at_boundaries = true;
  for (const StepPlan& p : w.schedule) {
    if (!p.has_landing) continue;
    const std::size_t idx = std::min<std::size_t>(
        log.samples.size() - 1,
        static_cast<std::size_t>(std::llround(p.t_end / w.request.dt)));
    if (!log.samples[idx].capture_expected) rep.expected_capture_at_boundaries = false;
  }
}

}  // namespace

TrajectoryLog plan_walk(const GaitRequest& request, Exec exec) {
  const auto wall_start = std::chrono::steady_clock::now();

  Walk w;
  w.request = request;
  w.init = derive_initial_state(request);
  w.duration = request.steps / w.init.models.cadence;
  w.work_rate = request.work_budget * w.init.models.cadence;
  w.schedule = build_schedule(request, w.init, w.duration);

  const int n = static_cast<int>(std::floor(w.duration / request.dt)) + 1;
  std::vector<PlanSample> samples(n);

  long first_error = -1;
  std::string error_message;
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i) {
      try {
        samples[i] = compute_sample(i * request.dt, w);
      } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (first_error < 0 || i < first_error) {
            first_error = i;
            error_message = e.what();
          }
        }
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      try {
        samples[i] = compute_sample(i * request.dt, w);
      } catch (const std::exception& e) {
        first_error = i;
        error_message = e.what();
        break;
      }
    }
  }
  if (first_error >= 0) {
    std::ostringstream msg;
    msg << "sample " << first_error << " (t=" << first_error * request.dt
        << " s): " << error_message;
    throw PlanningError(msg.str());
  }

  TrajectoryLog log;
  log.request = request;
  log.init = w.init;
  log.schedule = w.schedule;
  log.samples = std::move(samples);
  log.strides = stride_via_points(w);
  energy_pass(w, log.samples, log.report);
  aggregate(w, log);

  log.report.plan_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return log;
}

}  // namespace saddlewalk
