#include "saddlewalk/stability.hpp"

#include <cmath>
#include <stdexcept>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

StepStability step_stability(double measured_half_step, double speed,
                             const SpeedModels& models, const StepBounds& bounds) {
  if (!(speed > 0.0)) throw std::invalid_argument("walking speed must be positive");
  const double desired = models.half_step_length;
  const double den_min = desired - bounds.half_step_min;
  const double den_max = desired - bounds.half_step_max;
  if (std::abs(den_min) < 1e-9 || std::abs(den_max) < 1e-9) {
    throw PlanningError("degenerate step-stability window: desired half step on a bound");
  }
  return {(measured_half_step - bounds.half_step_min) / den_min,
          (measured_half_step - bounds.half_step_max) / den_max};
}

double ml_stability(double y_com, double speed, const SpeedModels& models) {
  if (!(speed > 0.0)) throw std::invalid_argument("walking speed must be positive");
  return 1.0 - 2.0 * std::abs(y_com) / models.step_width;
}

}  // namespace saddlewalk
