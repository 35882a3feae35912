#pragma once

#include <span>
#include <vector>

#include "saddlewalk/gait_models.hpp"
#include "saddlewalk/geometry.hpp"

namespace saddlewalk {

struct EnergyState {
  double potential = 0.0;        // J, m*g*z of the CoM
  double kinetic = 0.0;          // J, 0.5*m*|v|^2
  double work_budget = 0.0;      // J, Max(W): energy the biped can actively absorb
  double perturbation = 0.0;     // J, E_p
  double mos_potential = 0.0;    // J, potential at the expected MoS crossing
  double desired_kinetic = 0.0;  // J, K_des of the reference trajectory
  bool one_sided_velocity = false;  // endpoint of a series, velocity from a one-sided difference

  double total() const { return potential + kinetic + work_budget + perturbation; }
};

EnergyState energy_state(Vec3 com, Vec3 velocity, const AnthroProfile& profile,
                         double work_budget, double perturbation = 0.0);

/// States for a uniformly sampled CoM path; velocities by central differences
/// (one-sided and flagged at the ends). Throws for fewer than 2 samples.
std::vector<EnergyState> energy_series(std::span<const Vec3> com, double dt,
                                       const AnthroProfile& profile, double work_budget,
                                       double perturbation = 0.0);

/// True when the biped can absorb the energy surplus and come to rest within
/// the current feet posture: Max(W) >= U_MoS - U_CoM - K - E_p.
bool static_capture(const EnergyState& e);

/// Stabilizability margin of a path from state a to state b against the
/// dissipation capacity w_capacity; non-negative margins certify the segment.
double lyapunov_margin(const EnergyState& a, const EnergyState& b, double w_capacity);

/// Per-sample check of the energy decrease condition, net of a declared
/// active-work rate (J/s). Throws for series shorter than 3 samples.
std::vector<bool> energy_rate_check(std::span<const EnergyState> series, double dt,
                                    double work_rate = 0.0);

}  // namespace saddlewalk
