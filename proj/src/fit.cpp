#include "pgt/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pgt/gaussian.hpp"

namespace pgt {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples) {
  std::set<double> scales;
  for (const auto& [x, y] : samples) {
    if (!(x > 0) || !(y > 0)) throw DomainError("fit_exponent: scales and magnitudes must be positive");
    scales.insert(x);
  }
  if (scales.size() < 2) throw DomainError("fit_exponent: need at least two distinct scales");

  const double n = static_cast<double>(samples.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : samples) {
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : samples) {
    const double dx = std::log(x) - mx, dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  FitResult out;
  out.samples = samples;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double sse = 0;
  for (const auto& [x, y] : samples) {
    const double r = std::log(y) - (out.intercept + out.slope * std::log(x));
    out.residuals.push_back(r);
    sse += r * r;
  }
  // Constant data has no variance to explain; call that a perfect fit.
  out.r_squared = syy > 1e-300 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return out;
}

}  // namespace pgt
