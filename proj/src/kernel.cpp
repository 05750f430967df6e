#include "pgt/kernel.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pgt/gaussian.hpp"

namespace pgt {

namespace {

using boost::math::quadrature::gauss_kronrod;

double phi(double t) {
  const double s = 1.0 - t * t;
  return s > 0 ? std::exp(-1.0 / s) : 0.0;
}

double phi_prime(double t) {
  const double s = 1.0 - t * t;
  return s > 0 ? phi(t) * (-2.0 * t / (s * s)) : 0.0;
}

// The bump is flat to all orders at +-1, so adaptive Gauss-Kronrod converges fast.
template <class F>
double integrate(F f, double a, double b) {
  return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-14);
}

}  // namespace

double KernelSpec::normalizer() {
  static const double I0 = integrate(phi, -1.0, 1.0);
  return I0;
}

KernelSpec::KernelSpec(double Y) : Y_(Y) {
  if (!(Y > 0) || !std::isfinite(Y)) throw DomainError("KernelSpec: Y must be positive");
}

double KernelSpec::density(double u) const {
  const double t = (2.0 * u - 3.0 * Y_) / Y_;
  return phi(t) / (normalizer() * Y_ / 2.0);
}

double KernelSpec::derivative(double u) const {
  const double t = (2.0 * u - 3.0 * Y_) / Y_;
  return phi_prime(t) * (2.0 / Y_) / (normalizer() * Y_ / 2.0);
}

double KernelSpec::cdf(double u) const {
  const double t = (2.0 * u - 3.0 * Y_) / Y_;
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  // Integrate from the nearer end for accuracy in the tails.
  if (t <= 0.0) return integrate(phi, -1.0, t) / normalizer();
  return 1.0 - integrate(phi, t, 1.0) / normalizer();
}

double KernelSpec::mass() const {
  return integrate([this](double u) { return density(u); }, Y_, 2.0 * Y_);
}

double KernelSpec::derivative_l1() const {
  const double mid = 1.5 * Y_;
  const auto g = [this](double u) { return std::abs(derivative(u)); };
  return integrate(g, Y_, mid) + integrate(g, mid, 2.0 * Y_);
}

double KernelSpec::moment(int j) const {
  if (j < 0 || j > 2) throw DomainError("KernelSpec::moment: j must be 0, 1 or 2");
  const double mean = 1.5 * Y_;
  if (j == 0) return 1.0;
  if (j == 1) return mean;
  const double t2 = integrate([](double t) { return t * t * phi(t); }, -1.0, 1.0) / normalizer();
  return mean * mean + (Y_ / 2.0) * (Y_ / 2.0) * t2;
}

}  // namespace pgt
