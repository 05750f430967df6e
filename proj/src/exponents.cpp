#include "pgt/exponents.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pgt/gaussian.hpp"

namespace pgt {

namespace {

// Root of f on [lo, hi] with f(lo), f(hi) of opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0) return lo;
  if ((flo > 0) == (f(hi) > 0)) throw DomainError("bisect: no sign change on the bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double beta_equation(double sigma, double nu) {
  return 20.0 * (1 - sigma) / (3 - sigma) - nu - (sigma - 1) * (3 * nu - 1) / (4 - 3 * sigma);
}

double alpha_equation(double sigma, double nu, double eta) {
  return 20.0 * (1 - sigma) / (3 - sigma) - eta - (nu - eta) * (1 - eta) / (2 - eta - sigma);
}

void check_theta(const Rational& theta) {
  if (theta < Rational(0) || theta > Rational(1, 4)) throw DomainError("theta must lie in [0, 1/4]");
}

// The root sits strictly below 1 for every admissible input; stop the
// bracket just short of the pole-free endpoint.
constexpr double kSigmaHi = 1.0 - 1e-15;

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const auto p = std::stoll(text.substr(0, slash));
      const auto q = std::stoll(text.substr(slash + 1));
      if (q == 0) throw DomainError("parse_rational: zero denominator");
      return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) throw DomainError("parse_rational: too many decimals in " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string whole = text.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    const std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    return Rational(w) + Rational(neg ? -f : f, den);
  } catch (const std::logic_error&) {
    throw DomainError("parse_rational: cannot parse '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ExponentSolution solve_beta(double nu) {
  if (!(nu > 1.0 / 3.0) || !(nu <= 1.0)) throw DomainError("solve_beta: nu must lie in (1/3, 1]");
  ExponentSolution s;
  s.nu = nu;
  s.sigma = bisect([nu](double x) { return beta_equation(x, nu); }, 0.5, kSigmaHi);
  s.beta = (1 - s.sigma) * (3 * nu - 1) / (4 - 3 * s.sigma);
  s.residual = std::abs(beta_equation(s.sigma, nu));
  return s;
}

ExponentSolution solve_alpha(double nu, double eta) {
  if (!(eta > 0.25) || !(eta <= 0.5)) throw DomainError("solve_alpha: eta must lie in (1/4, 1/2]");
  if (!(nu >= eta) || !(nu <= 1.0)) throw DomainError("solve_alpha: need eta <= nu <= 1");
  ExponentSolution s;
  s.nu = nu;
  s.eta = eta;
  s.sigma = bisect([=](double x) { return alpha_equation(x, nu, eta); }, 0.5, kSigmaHi);
  s.alpha = (nu - eta) * (1 - s.sigma) / (2 - eta - s.sigma);
  s.residual = std::abs(alpha_equation(s.sigma, nu, eta));
  return s;
}

CorollaryExponents corollary_exponents(const Rational& theta) {
  check_theta(theta);
  const Rational three_halves(3, 2);
  CorollaryExponents c;
  c.theta = theta;
  c.subconvex = three_halves + Rational(4, 7) * theta;
  c.mean_lindelof = three_halves + (Rational(24) * theta - 1) / 46;
  c.trivial = three_halves + Rational(2, 3) * theta;
  c.Y_subconvex = (Rational(21) - Rational(16) * theta) / 28;
  c.Y_mean_lindelof = (Rational(16) - Rational(16) * theta) / 23;
  c.Y_trivial = (Rational(9) - Rational(4) * theta) / 12;
  return c;
}

UncondSystem uncond_system() {
  UncondSystem u;
  const auto gap = [](double nu) { return solve_beta(nu).beta - (8 * nu - 5) / 4; };
  u.nu = bisect(gap, 5.0 / 8.0, 1.0);
  const auto s = solve_beta(u.nu);
  u.sigma = s.sigma;
  u.beta = s.beta;
  u.pointwise_exponent = 13.0 / 8.0 - u.beta / 2;
  const double r = std::sqrt(31049.0);
  u.sigma_closed = (619 - r) / 472;
  u.nu_closed = (197 - r) / 32;
  u.half_beta_closed = (177 - r) / 32;
  const double b = 2 * u.half_beta_closed;
  u.closed_residual = std::max({std::abs(b - (8 * u.nu_closed - 5) / 4),
                                std::abs(b - (u.nu_closed - 20 * (1 - u.sigma_closed) / (3 - u.sigma_closed))),
                                std::abs(b - (1 - u.sigma_closed) * (3 * u.nu_closed - 1) / (4 - 3 * u.sigma_closed))});
  return u;
}

ShortIntervalExponents short_interval_exponents(const Rational& theta) {
  check_theta(theta);
  ShortIntervalExponents e;
  e.theta = theta;
  e.X_subconvex = (Rational(4) * theta + 6) / 5;
  e.Y_subconvex = Rational(2, 5);
  e.X_gauss = Rational(11, 10);
  e.Y_gauss = Rational(3, 5);
  e.V_X = (Rational(2) * theta - Rational(1, 3)) * Rational(6, 5);
  e.V_Y = Rational(6, 5);
  return e;
}

}  // namespace pgt
