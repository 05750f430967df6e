// fit.hpp
//
// Least-squares power-law fits on log-log data.

#pragma once

#include <utility>
#include <vector>

namespace pgt {

struct FitResult {
  double slope = 0;
  double intercept = 0;  // log of the constant
  double r_squared = 1;
  std::vector<std::pair<double, double>> samples;  // (scale, magnitude)
  std::vector<double> residuals;                   // in log space
};

/// Fits log(magnitude) = intercept + slope log(scale). Needs at least two
/// distinct scales and positive values; throws DomainError otherwise.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples);

}  // namespace pgt
