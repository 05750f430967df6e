// geodesics.hpp
//
// Psi(X) for the Picard group through the sum over traces
//   Psi(X) = C sum_{n : 1 < N(z_n) <= X} sqrt(N(n^2 - 4)) L(1, n^2 - 4),
// where z_n is the root of z + 1/z = n of larger norm, n runs over all
// Gaussian integers and L(1, delta) is in the ideal convention.
//
// Terms are stored in fixed point (scale 2^40, 128-bit) so that interval
// sums are exact differences of integer prefix sums.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pgt/gaussian.hpp"
#include "pgt/kernel.hpp"
#include "pgt/lfunctions.hpp"
#include "pgt/parallel.hpp"

namespace pgt {

/// C = 1/pi. With L(1, delta) averaging 1 over n in the ideal convention,
/// sum over elements n with N(n) <= X of N(n) is pi X^2 / 2.
inline constexpr double kGeodesicConstant = 0.31830988618379067154;

/// Largest X for which a full psi evaluation is accepted.
inline constexpr double kPsiMaxX = 3e4;

/// max over the two roots of N((n +- sqrt(n^2-4))/2), in extended
/// precision; nullopt when n^2 - 4 = 0 or both roots have norm 1.
std::optional<long double> trace_threshold(GaussianInt n);

struct TraceTerm {
  GaussianInt n;           // representative with re >= 0, im >= 0
  int multiplicity = 0;    // elements in the orbit {+-n, +-conj(n)}
  long double threshold = 0;
  double weight = 0;       // sqrt(N(n^2 - 4))
  ZagierValue L1;
  [[nodiscard]] double contribution() const;  // multiplicity * weight * L1 (no constant)
};

struct GeodesicCountResult {
  double X = 0;
  double psi = 0;
  double main = 0;  // X^2 / 2
  double remainder = 0;
  double constant_used = kGeodesicConstant;
};

struct ShortIntervalResult {
  double X = 0, Y = 0;
  double difference = 0;
  double main = 0;  // XY + Y^2/2
  double remainder = 0;
  double normalized_error = 0;  // remainder / (XY)
};

struct TowerStats {
  double Q = 0;                           // 2 + max N(n) over the traces
  std::map<std::string, std::int64_t> per_D_counts;
  std::int64_t N_max = 0;
  std::int64_t card = 0;                  // traces (elements) in the interval
};

class GeodesicSum {
 public:
  explicit GeodesicSum(double X_max, Execution exec = Execution::parallel);

  /// Process-wide instance covering at least X_max.
  static std::shared_ptr<const GeodesicSum> shared(double X_max);

  [[nodiscard]] double X_max() const { return X_max_; }
  [[nodiscard]] const std::vector<TraceTerm>& terms() const { return terms_; }

  /// Unscaled sum of contributions with threshold <= X (no constant).
  [[nodiscard]] double raw(double X) const;
  [[nodiscard]] GeodesicCountResult psi(double X) const;
  /// Only the traces with threshold in (X, X+Y] are touched.
  [[nodiscard]] ShortIntervalResult interval(double X, double Y) const;
  /// The same interval sum in fixed-point units, before scaling.
  [[nodiscard]] __int128 interval_fixed(double X, double Y) const;
  [[nodiscard]] double smoothed(double X, const KernelSpec& k) const;
  [[nodiscard]] TowerStats towers(double X, double Y) const;

 private:
  [[nodiscard]] std::size_t upper(long double X) const;  // first index with threshold > X
  [[nodiscard]] double from_fixed(__int128 v) const;
  void require(double X) const;

  double X_max_;
  std::vector<TraceTerm> terms_;    // sorted by threshold
  std::vector<__int128> prefix_;    // prefix_[i] = sum of the first i fixed-point terms
};

GeodesicCountResult psi(double X);
ShortIntervalResult psi_short_interval(double X, double Y);
double psi_smoothed(double X, const KernelSpec& k);
TowerStats tower_stats(double X, double Y);

/// C with C raw(X) ~ X^2 / 2, the mean of X^2 / (2 raw(X)) over the grid.
double fitted_geodesic_constant(const GeodesicSum& sum, const std::vector<double>& X_grid);

/// integral of psi(X + u) k(u) du by the composite midpoint rule on `points` cells.
double psi_smoothed_quadrature(const GeodesicSum& sum, double X, const KernelSpec& k, int points = 64);

}  // namespace pgt
