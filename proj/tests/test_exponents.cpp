#include <doctest.h>

#include <cmath>

#include "pgt/exponents.hpp"
#include "pgt/gaussian.hpp"

using namespace pgt;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/6") == Rational(1, 6));
  CHECK(parse_rational("2/12") == Rational(1, 6));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("0.1875") == Rational(3, 16));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(to_string(Rational(67, 42)) == "67/42");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("corollary exponents") {
  const auto e = corollary_exponents(Rational(1, 6));
  CHECK(e.subconvex == Rational(67, 42));
  CHECK(e.mean_lindelof == Rational(36, 23));
  CHECK(e.trivial == Rational(29, 18));
  CHECK(e.Y_subconvex == Rational(55, 84));
  const auto z = corollary_exponents(Rational(0));
  CHECK(z.subconvex == Rational(3, 2));
  CHECK(z.mean_lindelof == Rational(34, 23));
  CHECK(z.Y_trivial == Rational(3, 4));
  CHECK_THROWS_AS(corollary_exponents(Rational(-1, 6)), DomainError);
  CHECK_THROWS_AS(corollary_exponents(Rational(2, 3)), DomainError);
}

TEST_CASE("short-interval exponents") {
  const auto s = short_interval_exponents(Rational(1, 6));
  CHECK(s.X_subconvex == Rational(4, 3));
  CHECK(s.Y_subconvex == Rational(2, 5));
  CHECK(s.X_gauss == Rational(11, 10));
  CHECK(s.Y_gauss == Rational(3, 5));
  CHECK(s.V_X == Rational(0));
  CHECK(s.V_Y == Rational(6, 5));
}

TEST_CASE("beta") {
  double prev = -1;
  for (double nu = 0.35; nu <= 1.0; nu += 0.05) {
    const auto s = solve_beta(nu);
    CHECK(std::abs(s.residual) < 1e-10);
    CHECK(s.sigma >= 0.5);
    CHECK(s.sigma < 1);
    CHECK(s.beta > prev);
    prev = s.beta;
  }
  CHECK(solve_beta(1.0 / 3 + 1e-6).beta < 1e-5);
  CHECK_THROWS_AS(solve_beta(0.3), DomainError);
  CHECK_THROWS_AS(solve_beta(1.2), DomainError);
}

TEST_CASE("alpha") {
  const double eta = 131.0 / 416;
  CHECK(solve_alpha(eta, eta).alpha == doctest::Approx(0.0).epsilon(1e-12));
  double prev = -1;
  for (double nu = 0.35; nu <= 1.0; nu += 0.05) {
    const auto s = solve_alpha(nu, eta);
    CHECK(s.alpha > prev);
    CHECK(std::abs(s.residual) < 1e-10);
    prev = s.alpha;
  }
  CHECK(solve_alpha(0.5, eta).alpha == doctest::Approx(0.012580427930).epsilon(1e-9));
  CHECK_THROWS_AS(solve_alpha(0.5, 0.2), DomainError);
  CHECK_THROWS_AS(solve_alpha(0.3, 0.4), DomainError);
}

TEST_CASE("unconditional system") {
  const auto u = uncond_system();
  const double r = std::sqrt(31049.0);
  CHECK(u.sigma == doctest::Approx((619 - r) / 472).epsilon(1e-9));
  CHECK(u.nu == doctest::Approx((197 - r) / 32).epsilon(1e-9));
  CHECK(u.beta / 2 == doctest::Approx((177 - r) / 32).epsilon(1e-8));
  CHECK(u.pointwise_exponent == doctest::Approx(13.0 / 8 - u.beta / 2));
  CHECK(u.closed_residual < 1e-12);
}
