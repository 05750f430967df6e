// kernel.hpp
//
// Unit-mass smooth bump supported in (Y, 2Y):
//   k(u) = phi(t) / (I0 Y / 2),  t = (2u - 3Y)/Y,  phi(t) = exp(-1/(1-t^2)),
// with I0 = integral of phi over (-1, 1).

#pragma once

namespace pgt {

class KernelSpec {
 public:
  explicit KernelSpec(double Y);

  [[nodiscard]] double Y() const { return Y_; }
  [[nodiscard]] double density(double u) const;
  [[nodiscard]] double derivative(double u) const;
  /// integral of k over (-inf, u]; 0 below Y, 1 above 2Y.
  [[nodiscard]] double cdf(double u) const;

  /// Numerical integral of k over its support (1 up to quadrature error).
  [[nodiscard]] double mass() const;
  /// Numerical integral of |k'|; equals 2 max k = 4 e^{-1} / (I0 Y).
  [[nodiscard]] double derivative_l1() const;
  /// integral of u^j k(u) du for j = 0, 1, 2.
  [[nodiscard]] double moment(int j) const;

  static double normalizer();  // I0

 private:
  double Y_;
};

}  // namespace pgt
