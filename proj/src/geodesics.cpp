#include "pgt/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

#include <omp.h>

#include "pgt/characters.hpp"

namespace pgt {

namespace {

constexpr long double kFixedScale = 1099511627776.0L;  // 2^40

std::string key_up_to_sign(GaussianInt D) {
  if (D.re < 0 || (D.re == 0 && D.im < 0)) D = -D;
  return to_string(D);
}

}  // namespace

std::optional<long double> trace_threshold(GaussianInt n) {
  const GaussianInt delta = n * n - GaussianInt{4, 0};
  if (delta.is_zero()) return std::nullopt;
  using C = std::complex<long double>;
  const C nn(static_cast<long double>(n.re), static_cast<long double>(n.im));
  const C root = std::sqrt(C(static_cast<long double>(delta.re), static_cast<long double>(delta.im)));
  // Take the larger root directly and get the other as its inverse, which
  // avoids cancellation.
  C z = (nn + root) / 2.0L;
  const C w = (nn - root) / 2.0L;
  if (std::norm(w) > std::norm(z)) z = w;
  const long double t = std::norm(z);
  if (t <= 1.0L + 1e-15L) return std::nullopt;  // both roots on the unit circle
  return t;
}

double TraceTerm::contribution() const { return multiplicity * weight * L1.value; }

GeodesicSum::GeodesicSum(double X_max, Execution exec) : X_max_(X_max) {
  if (!(X_max > 0)) throw DomainError("GeodesicSum: X_max must be positive");
  if (X_max > kPsiMaxX * 1.5) throw LimitError("GeodesicSum: X above the desk budget");
  // N(z) >= (|n| - 1)^2 for the larger root, so |n| <= sqrt(X) + 1 suffices.
  const auto reach = static_cast<std::int64_t>(std::sqrt(X_max)) + 2;
  std::vector<TraceTerm> candidates;
  for (std::int64_t a = 0; a <= reach; ++a)
    for (std::int64_t b = 0; b <= reach; ++b) {
      const GaussianInt n{a, b};
      const auto t = trace_threshold(n);
      if (!t || *t > static_cast<long double>(X_max)) continue;
      TraceTerm term;
      term.n = n;
      term.multiplicity = (a == 0 || b == 0) ? 2 : 4;
      term.threshold = *t;
      term.weight = std::sqrt(static_cast<double>((n * n - GaussianInt{4, 0}).norm()));
      candidates.push_back(term);
    }
  const auto count = static_cast<std::int64_t>(candidates.size());
  const auto fill = [&](std::int64_t i) { candidates[i].L1 = zagier_L1_exact(candidates[i].n); };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count())
    for (std::int64_t i = 0; i < count; ++i) fill(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) fill(i);
  }
  std::sort(candidates.begin(), candidates.end(), [](const TraceTerm& x, const TraceTerm& y) {
    if (x.threshold != y.threshold) return x.threshold < y.threshold;
    return x.n.re != y.n.re ? x.n.re < y.n.re : x.n.im < y.n.im;
  });
  terms_ = std::move(candidates);
  prefix_.assign(terms_.size() + 1, 0);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const long double v = static_cast<long double>(terms_[i].contribution()) * kFixedScale;
    prefix_[i + 1] = prefix_[i] + static_cast<__int128>(std::llround(v));
  }
}

std::shared_ptr<const GeodesicSum> GeodesicSum::shared(double X_max) {
  static std::mutex mu;
  static std::shared_ptr<const GeodesicSum> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->X_max() < X_max) cached = std::make_shared<const GeodesicSum>(X_max);
  return cached;
}

void GeodesicSum::require(double X) const {
  if (X > X_max_) throw LimitError("GeodesicSum: X beyond the precomputed range");
}

std::size_t GeodesicSum::upper(long double X) const {
  const auto it = std::upper_bound(terms_.begin(), terms_.end(), X,
                                   [](long double x, const TraceTerm& t) { return x < t.threshold; });
  return static_cast<std::size_t>(it - terms_.begin());
}

double GeodesicSum::from_fixed(__int128 v) const {
  return static_cast<double>(static_cast<long double>(v) / kFixedScale);
}

double GeodesicSum::raw(double X) const {
  require(X);
  return from_fixed(prefix_[upper(X)]);
}

GeodesicCountResult GeodesicSum::psi(double X) const {
  GeodesicCountResult out;
  out.X = X;
  out.psi = kGeodesicConstant * raw(X);
  out.main = X * X / 2.0;
  out.remainder = out.psi - out.main;
  return out;
}

ShortIntervalResult GeodesicSum::interval(double X, double Y) const {
  if (!(Y >= 1.0) || !(Y <= X)) throw DomainError("psi_short_interval: need 1 <= Y <= X");
  require(X + Y);
  ShortIntervalResult out;
  out.X = X;
  out.Y = Y;
  out.difference = kGeodesicConstant * from_fixed(interval_fixed(X, Y));
  out.main = X * Y + Y * Y / 2.0;
  out.remainder = out.difference - out.main;
  out.normalized_error = out.remainder / (X * Y);
  return out;
}

__int128 GeodesicSum::interval_fixed(double X, double Y) const {
  require(X + Y);
  return prefix_[upper(X + Y)] - prefix_[upper(X)];
}

double GeodesicSum::smoothed(double X, const KernelSpec& k) const {
  const double Y = k.Y();
  require(X + 2.0 * Y);
  const std::size_t full = upper(X + Y);
  const std::size_t end = upper(X + 2.0 * Y);
  CompensatedSum<double> partial;
  for (std::size_t i = full; i < end; ++i)
    partial.add(terms_[i].contribution() * (1.0 - k.cdf(static_cast<double>(terms_[i].threshold - X))));
  return kGeodesicConstant * (from_fixed(prefix_[full]) + partial.value());
}

TowerStats GeodesicSum::towers(double X, double Y) const {
  require(X + Y);
  TowerStats out;
  std::int64_t max_norm = 0;
  for (std::size_t i = upper(X); i < upper(X + Y); ++i) {
    const auto& t = terms_[i];
    out.card += t.multiplicity;
    max_norm = std::max(max_norm, t.n.norm());
    // +-n share delta; conj(n) has the conjugate discriminant.
    const GaussianInt D = t.L1.split.D;
    out.per_D_counts[key_up_to_sign(D)] += 2;
    if (t.multiplicity == 4) out.per_D_counts[key_up_to_sign(D.conj())] += 2;
  }
  out.Q = 2.0 + static_cast<double>(max_norm);
  for (const auto& [k, c] : out.per_D_counts) out.N_max = std::max(out.N_max, c);
  return out;
}

namespace {

void check_X(double X) {
  if (!(X > 0)) throw DomainError("psi: X must be positive");
  if (X > kPsiMaxX) throw LimitError("psi: X above the desk budget of 3e4");
}

}  // namespace

GeodesicCountResult psi(double X) {
  check_X(X);
  return GeodesicSum::shared(X)->psi(X);
}

ShortIntervalResult psi_short_interval(double X, double Y) {
  check_X(X + Y);
  return GeodesicSum::shared(X + Y)->interval(X, Y);
}

double psi_smoothed(double X, const KernelSpec& k) {
  check_X(X + 2.0 * k.Y());
  return GeodesicSum::shared(X + 2.0 * k.Y())->smoothed(X, k);
}

TowerStats tower_stats(double X, double Y) {
  check_X(X + Y);
  return GeodesicSum::shared(X + Y)->towers(X, Y);
}

double fitted_geodesic_constant(const GeodesicSum& sum, const std::vector<double>& X_grid) {
  if (X_grid.empty()) throw DomainError("fitted_geodesic_constant: empty grid");
  // C with C raw(X) ~ X^2/2, averaged over the grid.
  double acc = 0;
  for (double X : X_grid) acc += (X * X / 2.0) / sum.raw(X);
  return acc / static_cast<double>(X_grid.size());
}

double psi_smoothed_quadrature(const GeodesicSum& sum, double X, const KernelSpec& k, int points) {
  const double Y = k.Y(), h = Y / points;
  CompensatedSum<double> acc;
  for (int j = 0; j < points; ++j) {
    const double u = Y + (j + 0.5) * h;
    acc.add(sum.psi(X + u).psi * k.density(u) * h);
  }
  return acc.value();
}

}  // namespace pgt
