// exponents.hpp
//
// Balancing equations behind the short-interval and pointwise exponents,
// solved by bisection, and the corollary exponents in exact rational
// arithmetic.

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace pgt {

using Rational = boost::rational<std::int64_t>;

/// "p/q", "p" or a terminating decimal such as "0.1875".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

struct ExponentSolution {
  double nu = 0;
  double eta = 0;
  double theta = 0;
  double sigma = 0;
  double beta = 0;
  double alpha = 0;
  double residual = 0;  // of the defining equation at sigma
};

/// sigma in [1/2, 1) with 20(1-sigma)/(3-sigma) - nu = (sigma-1)(3nu-1)/(4-3sigma),
/// and beta = (1-sigma)(3nu-1)/(4-3sigma). Needs 1/3 < nu <= 1.
ExponentSolution solve_beta(double nu);

/// sigma in [1/2, 1) with 20(1-sigma)/(3-sigma) = eta + (nu-eta)(1-eta)/(2-eta-sigma),
/// and alpha = (nu-eta)(1-sigma)/(2-eta-sigma). Needs 1/4 < eta <= 1/2, eta <= nu <= 1.
ExponentSolution solve_alpha(double nu, double eta);

struct CorollaryExponents {
  Rational theta;
  Rational subconvex;      // 3/2 + 4 theta/7
  Rational mean_lindelof;  // 3/2 + (24 theta - 1)/46
  Rational trivial;        // 3/2 + 2 theta/3, from S(T,X) << T^3
  Rational Y_subconvex;    // (21 - 16 theta)/28
  Rational Y_mean_lindelof;  // (16 - 16 theta)/23
  Rational Y_trivial;      // (9 - 4 theta)/12
};

CorollaryExponents corollary_exponents(const Rational& theta);

struct UncondSystem {
  double sigma = 0;
  double nu = 0;
  double beta = 0;
  double pointwise_exponent = 0;  // 13/8 - beta/2
  // (619 - sqrt 31049)/472, (197 - sqrt 31049)/32, (177 - sqrt 31049)/32
  double sigma_closed = 0, nu_closed = 0, half_beta_closed = 0;
  double closed_residual = 0;  // max residual of the closed forms in both equations
};

/// beta = (8 nu - 5)/4 together with beta = nu - 20(1-sigma)/(3-sigma)
/// = (1-sigma)(3nu-1)/(4-3sigma), by bisection on nu around solve_beta.
UncondSystem uncond_system();

struct ShortIntervalExponents {
  Rational theta;
  Rational X_subconvex, Y_subconvex;  // X^{(4 theta + 6)/5} Y^{2/5}
  Rational X_gauss, Y_gauss;          // X^{11/10} Y^{3/5}
  Rational V_X, V_Y;                  // V = (X^{2 theta - 1/3} Y)^{6/5}
};

ShortIntervalExponents short_interval_exponents(const Rational& theta);

}  // namespace pgt
