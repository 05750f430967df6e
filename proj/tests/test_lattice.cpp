#include <doctest.h>

#include <cmath>

#include "pgt/lattice.hpp"
#include "pgt/sweep_constants.hpp"

using namespace pgt;

namespace {

std::int64_t brute_count(double b1, double b2, double M) {
  const auto r = static_cast<std::int64_t>(std::sqrt(M)) + 2;
  std::int64_t n = 0;
  for (std::int64_t x = static_cast<std::int64_t>(std::floor(b1)) - r; x <= b1 + r; ++x)
    for (std::int64_t y = static_cast<std::int64_t>(std::floor(b2)) - r; y <= b2 + r; ++y) {
      const double dx = x - b1, dy = y - b2;
      if (dx * dx + dy * dy <= M) ++n;
    }
  return n;
}

}  // namespace

TEST_CASE("circle counts: examples") {
  CHECK(circle_count({0, 0}, 1).count == 5);
  CHECK(circle_count({0, 0}, 2).count == 9);
  CHECK(circle_count({0.5, 0.5}, 0.49).count == 0);
  CHECK(circle_count({0.5, 0.5}, 0.5).count == 4);  // boundary points included
  CHECK(circle_count({0, 0}, 25).count == 81);
  CHECK(circle_count({0, 0}, 1).remainder == doctest::Approx(5 - M_PI));
  CHECK_THROWS_AS(circle_count({0, 0}, 2e9), LimitError);
}

TEST_CASE("circle counts: oracle, translation, monotonicity") {
  // Centers are dyadic so the brute-force doubles are exact.
  const double centers[][2] = {{0, 0}, {0.25, 0.5}, {0.125, 0.875}, {0.5, 0.5}, {0.3, 0.7}};
  for (const auto& b : centers) {
    std::int64_t prev = -1;
    for (double M = 0.25; M <= 400; M += 3.25) {
      const auto r = circle_count({b[0], b[1]}, M);
      REQUIRE(r.count == brute_count(b[0], b[1], M));
      REQUIRE(r.count >= prev);
      prev = r.count;
      CHECK(circle_count({b[0] + 3, b[1] - 7}, M).count == r.count);
    }
  }
}

TEST_CASE("residue classes") {
  // Partition: summing over all classes gives every nonzero n with N(n) <= Z.
  const double Z = 1e4;
  const auto all = circle_count({0, 0}, Z).count - 1;
  for (const auto& q : ideals_up_to(50)) {
    const ResidueRing ring(q.value());
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < ring.size(); ++i) total += residue_class_count(ring.element(i), q, Z).count;
    REQUIRE(total == all);
  }
  CHECK(residue_class_count({0, 0}, CanonicalIdealRep{}, 1).count == 4);
  // The same class for every representative.
  const auto q = canonical_rep({2, 1});
  const auto base = residue_class_count({1, 0}, q, 5000).count;
  for (const GaussianInt shift : {GaussianInt{2, 1}, GaussianInt{-4, 3}, GaussianInt{10, 5}})
    CHECK(residue_class_count(GaussianInt{1, 0} + shift * GaussianInt{2, 1}, q, 5000).count == base);
  const auto r = residue_class_count({1, 0}, canonical_rep({30, 1}), 100);
  CHECK(r.below_modulus);
  // Remainders against the recorded constant at (2+i).
  for (std::int64_t i = 0; i < 5; ++i) {
    const auto c = residue_class_count(ResidueRing(q.value()).element(i), q, 1e4);
    CHECK(std::abs(c.remainder) <= sweep::kResidueClassConstant * std::pow(1e4 / 5, 0.35));
  }
}

TEST_CASE("eta fit") {
  const auto grid = log_grid(1e3, 1e5, 5);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == 1e3);
  CHECK(grid.back() == 1e5);
  const auto a = eta_fit(grid, 16, 42, Execution::serial);
  const auto b = eta_fit(grid, 16, 42, Execution::parallel);
  CHECK(a.samples == b.samples);
  CHECK(a.fitted_exponent == b.fitted_exponent);
  CHECK(a.fitted_exponent < 0.5);
  CHECK(a.fitted_exponent > 0.1);
  CHECK(eta_fit(grid, 16, 43).samples != a.samples);
  CHECK_THROWS_AS(eta_fit({1e4}, 4), DomainError);
}
