#include "saddlewalk/energy.hpp"

#include <stdexcept>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

EnergyState energy_state(Vec3 com, Vec3 velocity, const AnthroProfile& profile,
                         double work_budget, double perturbation) {
  EnergyState e;
  e.potential = profile.mass * kGravity * com.z;
  e.kinetic = 0.5 * profile.mass * (velocity.x * velocity.x + velocity.y * velocity.y +
                                    velocity.z * velocity.z);
  e.work_budget = work_budget;
  e.perturbation = perturbation;
  e.mos_potential = e.potential;
  return e;
}

std::vector<EnergyState> energy_series(std::span<const Vec3> com, double dt,
                                       const AnthroProfile& profile, double work_budget,
                                       double perturbation) {
  if (com.size() < 2) throw std::invalid_argument("energy series needs at least 2 samples");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const std::size_t n = com.size();
  std::vector<EnergyState> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 v;
    bool one_sided = false;
    if (i == 0) {
      v = (com[1] - com[0]) * (1.0 / dt);
      one_sided = true;
    } else if (i == n - 1) {
      v = (com[n - 1] - com[n - 2]) * (1.0 / dt);
      one_sided = true;
    } else {
      v = (com[i + 1] - com[i - 1]) * (1.0 / (2.0 * dt));
    }
    out[i] = energy_state(com[i], v, profile, work_budget, perturbation);
    out[i].one_sided_velocity = one_sided;
  }
  return out;
}

bool static_capture(const EnergyState& e) {
  return e.work_budget >= e.mos_potential - e.potential - e.kinetic - e.perturbation;
}

double lyapunov_margin(const EnergyState& a, const EnergyState& b, double w_capacity) {
  return w_capacity - (b.potential - a.potential + b.kinetic - b.desired_kinetic);
}

std::vector<bool> energy_rate_check(std::span<const EnergyState> series, double dt,
                                    double work_rate) {
  if (series.size() < 3) {
    throw std::invalid_argument("energy rate check needs at least 3 samples");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const std::size_t n = series.size();
  std::vector<bool> ok(n);
  constexpr double kTol = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    double rate;
    if (i == 0) {
      rate = (series[1].total() - series[0].total()) / dt;
    } else if (i == n - 1) {
      rate = (series[n - 1].total() - series[n - 2].total()) / dt;
    } else {
      rate = (series[i + 1].total() - series[i - 1].total()) / (2.0 * dt);
    }
    ok[i] = rate - work_rate <= kTol;
  }
  return ok;
}

}  // namespace saddlewalk
