// Recomputes the empirical constants stored in include/pgt/sweep_constants.hpp.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "pgt/fit.hpp"
#include "pgt/geodesics.hpp"
#include "pgt/lattice.hpp"
#include "pgt/quad_counts.hpp"

using namespace pgt;

namespace {

std::vector<GaussianInt> elements_up_to(std::int64_t max_norm) {
  std::vector<GaussianInt> out;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_norm)));
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      if (a * a + b * b <= max_norm) out.push_back({a, b});
  return out;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  // Weil ratio: c with N(c) <= 500, m over ideal generators, n over elements.
  std::vector<GaussianInt> ms{{0, 0}};
  for (const auto& q : ideals_up_to(5)) ms.push_back(q.value());
  const auto ns = elements_up_to(5);
  double cw = 0;
  for (const auto& c : ideals_up_to(500))
    for (const auto& m : ms)
      for (const auto& n : ns) cw = std::max(cw, weil_ratio(kloosterman(m, n, c)));
  std::printf("weil_ratio_max %.6f\n", cw);

  // Residue classes mod (2+i) at Z = 1e4.
  const auto q = canonical_rep({2, 1});
  double rc = 0;
  const ResidueRing ring(q.value());
  for (std::int64_t i = 0; i < ring.size(); ++i)
    rc = std::max(rc, std::abs(residue_class_count(ring.element(i), q, 1e4).remainder) / std::pow(1e4 / 5, 0.35));
  std::printf("residue_class_constant %.6f\n", rc);

  // Geodesic sweeps.
  const GeodesicSum g(1.07e4);
  double tower = 0, card = 0, triv = 0;
  for (double X : {1e3, 3e3, 1e4}) {
    const double Y = std::pow(X, 0.7);
    const auto t = g.towers(X, Y);
    tower = std::max(tower, static_cast<double>(t.N_max) / std::log(t.Q));
    card = std::max(card, static_cast<double>(t.card) / (Y * std::log(X)));
    std::printf("normalized_error X=%g %.6f\n", X, g.interval(X, Y).normalized_error);
    for (double nu : {0.0, 0.25, 0.5, 0.7, 1.0}) {
      const double Yt = std::pow(X, nu);
      if (X + Yt > g.X_max()) continue;
      triv = std::max(triv, g.interval(X, Yt).difference / (X * Yt));
    }
  }
  std::printf("tower_constant %.6f\ncard_constant %.6f\ntrivial_bound_constant %.6f\n", tower, card, triv);

  // Spread of the fitted slope for a seeded noisy power law.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> noise(0.0, 0.05);
  double lo = 1, hi = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<double, double>> s;
    for (int k = 0; k < 10; ++k) {
      const double x = std::pow(10.0, 1 + 0.3 * k);
      s.emplace_back(x, std::pow(x, 0.5) * std::exp(noise(rng)));
    }
    const double slope = fit_exponent(s).slope;
    lo = std::min(lo, slope);
    hi = std::max(hi, slope);
  }
  std::printf("noisy_slope_band %.6f %.6f\n", lo, hi);
  std::printf("seconds %.1f\n", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}
