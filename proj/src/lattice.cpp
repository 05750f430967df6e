#include "pgt/lattice.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <omp.h>

namespace pgt {

namespace {

using boost::multiprecision::cpp_rational;

class Disk {
 public:
  Disk(std::pair<double, double> b, double M) : b1_(b.first), b2_(b.second), M_(M) {}

  [[nodiscard]] bool inside(std::int64_t x, std::int64_t y) const {
    const long double dx = static_cast<long double>(x) - b1_;
    const long double dy = static_cast<long double>(y) - b2_;
    const long double gap = dx * dx + dy * dy - static_cast<long double>(M_);
    // long double rounding error here is far below 1e-9 (M + 1).
    if (std::fabs(gap) > 1e-9L * (static_cast<long double>(M_) + 1)) return gap < 0;
    const cpp_rational ex = cpp_rational(x) - cpp_rational(b1_);
    const cpp_rational ey = cpp_rational(y) - cpp_rational(b2_);
    return ex * ex + ey * ey <= cpp_rational(M_);
  }

  [[nodiscard]] std::int64_t row(std::int64_t y) const {
    const auto xc = static_cast<std::int64_t>(std::llround(b1_));
    if (!inside(xc, y)) return 0;
    const long double dy = static_cast<long double>(y) - b2_;
    const long double r = std::max(0.0L, static_cast<long double>(M_) - dy * dy);
    const long double s = std::sqrt(r);
    auto lo = static_cast<std::int64_t>(std::ceil(static_cast<long double>(b1_) - s));
    auto hi = static_cast<std::int64_t>(std::floor(static_cast<long double>(b1_) + s));
    lo = std::min(lo, xc);
    hi = std::max(hi, xc);
    while (inside(lo - 1, y)) --lo;
    while (!inside(lo, y)) ++lo;
    while (inside(hi + 1, y)) ++hi;
    while (!inside(hi, y)) --hi;
    return hi - lo + 1;
  }

 private:
  double b1_, b2_, M_;
};

}  // namespace

LatticeCountResult circle_count(std::pair<double, double> b, double M) {
  if (!(M > 0)) throw DomainError("circle_count: M must be positive");
  if (M > kCircleMaxM) throw LimitError("circle_count: M above 1e9");
  if (!std::isfinite(b.first) || !std::isfinite(b.second)) throw DomainError("circle_count: center not finite");
  const Disk disk(b, M);
  const double s = std::sqrt(M);
  const auto y0 = static_cast<std::int64_t>(std::floor(b.second - s)) - 1;
  const auto y1 = static_cast<std::int64_t>(std::ceil(b.second + s)) + 1;
  std::int64_t count = 0;
  for (std::int64_t y = y0; y <= y1; ++y) count += disk.row(y);
  LatticeCountResult out{b, M, count, static_cast<double>(count) - std::numbers::pi * M};
  if (std::abs(out.remainder) > 8.0 * std::sqrt(M) + 10.0)
    throw std::logic_error("circle_count: remainder exceeds the perimeter bound");
  return out;
}

ResidueClassCount residue_class_count(GaussianInt b, const CanonicalIdealRep& q, double Z) {
  if (!(Z >= 0)) throw DomainError("residue_class_count: Z must be nonnegative");
  if (Z > 1e12) throw LimitError("residue_class_count: Z above 1e12");
  const std::int64_t m = q.norm();
  // n = b + q t and N(n) <= Z  <=>  N(b conj(q) + m t) <= floor(Z) m.
  const GaussianInt c = b * q.value().conj();
  const auto R = static_cast<__int128>(std::floor(Z)) * m;
  std::int64_t count = 0;
  const auto reach = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(R))) + 1;
  const std::int64_t v0 = (-reach - c.im) / m - 1, v1 = (reach - c.im) / m + 1;
  auto floor_div = [](std::int64_t a, std::int64_t d) { return a / d - ((a % d != 0) && ((a < 0) != (d < 0))); };
  for (std::int64_t v = v0; v <= v1; ++v) {
    const __int128 y = static_cast<__int128>(c.im) + static_cast<__int128>(m) * v;
    const __int128 rem = R - y * y;
    if (rem < 0) continue;
    auto w = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(rem)));
    while (static_cast<__int128>(w) * w > rem) --w;
    while (static_cast<__int128>(w + 1) * (w + 1) <= rem) ++w;
    // -w <= c.re + m u <= w
    const std::int64_t ulo = -floor_div(w + c.re, m);
    const std::int64_t uhi = floor_div(w - c.re, m);
    if (uhi >= ulo) count += uhi - ulo + 1;
  }
  if (divides(q.value(), b)) --count;  // n = 0
  ResidueClassCount out;
  out.b = b;
  out.q = q;
  out.Z = Z;
  out.count = count;
  out.main = std::numbers::pi * Z / static_cast<double>(m);
  out.remainder = static_cast<double>(count) - out.main;
  out.below_modulus = Z < static_cast<double>(m);
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi >= lo) || n < 1) throw DomainError("log_grid: need 0 < lo <= hi and n >= 1");
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    const double t = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
    out.push_back(std::round(lo * std::pow(hi / lo, t)));
  }
  return out;
}

EtaFit eta_fit(const std::vector<double>& M_grid, int n_centers, std::uint64_t seed, Execution exec) {
  if (M_grid.size() < 2) throw DomainError("eta_fit: the grid needs at least two values of M");
  if (n_centers < 1) throw DomainError("eta_fit: need at least one center");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, double>> centers(static_cast<std::size_t>(n_centers));
  for (auto& c : centers) {
    c.first = unit(rng);
    c.second = unit(rng);
  }
  const std::size_t cells = M_grid.size() * centers.size();
  std::vector<double> rem(cells);
  const auto work = [&](std::size_t k) {
    const double M = M_grid[k / centers.size()];
    rem[k] = std::abs(circle_count(centers[k % centers.size()], M).remainder);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
    for (std::size_t k = 0; k < cells; ++k) work(k);
  } else {
    for (std::size_t k = 0; k < cells; ++k) work(k);
  }
  EtaFit out;
  for (std::size_t i = 0; i < M_grid.size(); ++i) {
    double mx = 0;
    for (std::size_t j = 0; j < centers.size(); ++j) mx = std::max(mx, rem[i * centers.size() + j]);
    out.samples.emplace_back(M_grid[i], mx);
  }
  out.fit = fit_exponent(out.samples);
  out.fitted_exponent = out.fit.slope;
  out.constant = std::exp(out.fit.intercept);
  return out;
}

}  // namespace pgt
