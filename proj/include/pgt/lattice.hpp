// lattice.hpp
//
// Lattice points of Z^2 in closed disks |x - b|^2 <= M, in residue classes
// of Z[i], and the empirical circle-problem exponent.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pgt/fit.hpp"
#include "pgt/gaussian.hpp"
#include "pgt/parallel.hpp"

namespace pgt {

inline constexpr double kCircleMaxM = 1e9;

struct LatticeCountResult {
  std::pair<double, double> center;
  double M = 0;
  std::int64_t count = 0;
  double remainder = 0;  // count - pi M
};

/// Exact count of integer points with (x-b1)^2 + (y-b2)^2 <= M. Points near
/// the boundary are decided in exact rational arithmetic (doubles are dyadic
/// rationals), so ties are included without any epsilon.
LatticeCountResult circle_count(std::pair<double, double> b, double M);

struct ResidueClassCount {
  GaussianInt b;
  CanonicalIdealRep q;
  double Z = 0;
  std::int64_t count = 0;  // #{ n != 0 : n = b mod q, N(n) <= Z }
  double main = 0;         // pi Z / N(q)
  double remainder = 0;
  bool below_modulus = false;  // Z < N(q): main term under one point
};

ResidueClassCount residue_class_count(GaussianInt b, const CanonicalIdealRep& q, double Z);

struct EtaFit {
  std::vector<std::pair<double, double>> samples;  // (M, max |remainder| over centers)
  double fitted_exponent = 0;
  double constant = 0;
  FitResult fit;
};

inline constexpr std::uint64_t kDefaultSeed = 7;

/// Centers uniform in [0,1)^2 from mt19937_64(seed), shared across the grid.
EtaFit eta_fit(const std::vector<double>& M_grid, int n_centers, std::uint64_t seed = kDefaultSeed,
               Execution exec = Execution::parallel);

/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace pgt
