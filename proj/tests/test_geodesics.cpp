#include <doctest.h>

#include <cmath>

#include "pgt/geodesics.hpp"
#include "pgt/kernel.hpp"
#include "pgt/sweep_constants.hpp"

using namespace pgt;

TEST_CASE("kernel") {
  for (double Y : {1.0, 10.0, 250.0}) {
    const KernelSpec k(Y);
    CHECK(std::abs(k.mass() - 1) < 1e-8);
    CHECK(k.density(Y) == 0);
    CHECK(k.density(2 * Y) == 0);
    CHECK(k.density(1.5 * Y) > 0);
    CHECK(k.cdf(0.5 * Y) == 0);
    CHECK(k.cdf(3 * Y) == 1);
    CHECK(k.cdf(1.5 * Y) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(k.moment(1) == doctest::Approx(1.5 * Y).epsilon(1e-10));
    CHECK(k.derivative_l1() * Y == doctest::Approx(4 / (M_E * KernelSpec::normalizer())).epsilon(1e-6));
    // Finite-difference check of the derivative.
    const double u = 1.3 * Y, h = 1e-5 * Y;
    CHECK(k.derivative(u) == doctest::Approx((k.density(u + h) - k.density(u - h)) / (2 * h)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(KernelSpec(0.0), DomainError);
}

TEST_CASE("trace thresholds") {
  CHECK_FALSE(trace_threshold({2, 0}).has_value());
  CHECK_FALSE(trace_threshold({-2, 0}).has_value());
  CHECK_FALSE(trace_threshold({0, 0}).has_value());
  const auto t3 = trace_threshold({3, 0});
  REQUIRE(t3.has_value());
  CHECK(static_cast<double>(*t3) == doctest::Approx(std::pow((3 + std::sqrt(5.0)) / 2, 2)).epsilon(1e-12));
  CHECK(static_cast<double>(*t3) == doctest::Approx(6.854101966).epsilon(1e-9));
  // The two roots are reciprocal: z z' = 1.
  for (const GaussianInt n : {GaussianInt{1, 1}, GaussianInt{3, 2}, GaussianInt{0, 1}, GaussianInt{1, 0}}) {
    const auto t = trace_threshold(n);
    if (!t) continue;
    const std::complex<long double> nn(n.re, n.im);
    const auto r = std::sqrt(nn * nn - 4.0L);
    const long double a = std::norm((nn + r) / 2.0L), b = std::norm((nn - r) / 2.0L);
    CHECK(static_cast<double>(a * b) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(static_cast<double>(*t) == doctest::Approx(static_cast<double>(std::max(a, b))).epsilon(1e-12));
  }
}

TEST_CASE("psi") {
  const auto sum = GeodesicSum::shared(1.2e4);
  const auto& terms = sum->terms();
  bool has3 = false;
  for (const auto& t : terms) {
    if (t.n == GaussianInt{3, 0}) has3 = true;
    CHECK(t.threshold > 1);
    CHECK((t.multiplicity == 2 || t.multiplicity == 4));
  }
  CHECK(has3);
  CHECK(sum->raw(6.0) < sum->raw(7.0));
  bool below = true;
  for (const auto& t : terms)
    if (t.n == GaussianInt{3, 0}) below = t.threshold > 6;
  CHECK(below);
  double prev = 0;
  for (double X = 10; X <= 1e4; X *= 1.37) {
    const double p = sum->psi(X).psi;
    CHECK(p >= prev);
    prev = p;
  }
  CHECK(std::abs(sum->psi(1e4).psi / 5e7 - 1) < 0.01);
  CHECK(psi(1e3).psi == doctest::Approx(sum->psi(1e3).psi));
  CHECK_THROWS_AS(psi(1e6), LimitError);
}

TEST_CASE("short intervals") {
  const auto sum = GeodesicSum::shared(1.2e4);
  const double X = 3e3, Y1 = 150, Y2 = 400;
  CHECK(sum->interval_fixed(X, Y1) + sum->interval_fixed(X + Y1, Y2) == sum->interval_fixed(X, Y1 + Y2));
  for (double nu : {0.25, 0.5, 0.7, 1.0}) {
    const double Y = std::pow(X, nu);
    const auto r = sum->interval(X, Y);
    CHECK(r.difference >= 0);
    CHECK(r.difference <= sweep::kTrivialBoundConstant * X * Y);
  }
  CHECK(std::abs(sum->interval(1e4, std::pow(1e4, 0.7)).normalized_error) <= sweep::kNormalizedErrorBand);
  CHECK_THROWS_AS((void)sum->interval(100, 200), DomainError);
}

TEST_CASE("smoothed sum") {
  const auto sum = GeodesicSum::shared(1.2e4);
  const double X = 1e3;
  for (double Y : {20.0, 100.0}) {
    const KernelSpec k(Y);
    const double s = sum->smoothed(X, k);
    CHECK(s >= sum->psi(X + Y).psi);
    CHECK(s <= sum->psi(X + 2 * Y).psi);
    CHECK(std::abs(s / psi_smoothed_quadrature(*sum, X, k) - 1) < 1e-3);
    // Smoothed main term: (1/2) integral (X+u)^2 k(u) du.
    const double main = 0.5 * (X * X + 2 * X * k.moment(1) + k.moment(2));
    CHECK(std::abs(s / main - 1) < 0.01);
  }
}

TEST_CASE("towers") {
  const auto sum = GeodesicSum::shared(1.2e4);
  for (double X : {1e3, 3e3, 1e4}) {
    const double Y = std::pow(X, 0.7);
    const auto t = sum->towers(X, Y);
    CHECK(t.card > 0);
    CHECK(t.N_max >= 1);
    std::int64_t total = 0;
    for (const auto& [D, c] : t.per_D_counts) total += c;
    CHECK(total == t.card);
    CHECK(t.N_max <= sweep::kTowerConstant * std::log(t.Q) + 1e-9);
    CHECK(t.card <= sweep::kCardConstant * Y * std::log(X));
  }
}

TEST_CASE("fitted constant") {
  const auto sum = GeodesicSum::shared(1.2e4);
  const double c = fitted_geodesic_constant(*sum, {1e3, 3e3, 1e4});
  CHECK(std::abs(c * M_PI - 1) < 0.05);
}

TEST_CASE("parallel build matches serial") {
  const GeodesicSum a(600, Execution::serial), b(600, Execution::parallel);
  REQUIRE(a.terms().size() == b.terms().size());
  CHECK(a.interval_fixed(10, 590) == b.interval_fixed(10, 590));
  CHECK(a.psi(600).psi == b.psi(600).psi);
}
