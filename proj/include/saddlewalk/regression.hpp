#pragma once

#include <span>

namespace saddlewalk {

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

/// Ordinary least squares y = slope*x + intercept with the coefficient of
/// determination. Constant ys give slope 0 and, by convention, R^2 = 0
/// (SS_tot = 0). Throws for fewer than 3 points or degenerate xs.
RegressionFit fit_linear(std::span<const double> xs, std::span<const double> ys);

}  // namespace saddlewalk
