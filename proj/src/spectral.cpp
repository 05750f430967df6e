#include "pgt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pgt/gaussian.hpp"
#include "pgt/parallel.hpp"

namespace pgt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class F>
double integrate(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-12);
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::int64_t EigenvalueTable::count_up_to(double T) const {
  return std::upper_bound(r_values.begin(), r_values.end(), T) - r_values.begin();
}

EigenvalueTable parse_eigenvalues(const std::string& text, const std::string& origin) {
  EigenvalueTable table;
  table.source = origin;
  table.checksum = fnv1a64(text);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("source:", 0) == 0) table.source = trim(body.substr(7));
      continue;
    }
    const auto where = origin + ":" + std::to_string(lineno);
    double r = 0;
    std::size_t used = 0;
    try {
      r = std::stod(t, &used);
    } catch (const std::exception&) {
      throw DomainError(where + ": not a number: " + t);
    }
    if (used != t.size()) throw DomainError(where + ": trailing characters: " + t);
    if (!(r > 0) || !std::isfinite(r)) throw DomainError(where + ": entries must be positive");
    if (!table.r_values.empty() && r <= table.r_values.back())
      throw DomainError(where + ": entries must be strictly ascending");
    table.r_values.push_back(r);
  }
  return table;
}

EigenvalueTable load_eigenvalues(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("load_eigenvalues: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_eigenvalues(ss.str(), path);
}

std::complex<double> spectral_sum(const EigenvalueTable& table, double T, double X) {
  if (!(T >= 0)) throw DomainError("spectral_sum: T must be nonnegative");
  if (!(X >= 1)) throw DomainError("spectral_sum: X must be at least 1");
  const double logX = std::log(X);
  const auto n = static_cast<std::size_t>(table.count_up_to(T));
  std::vector<std::complex<double>> terms(n);
  for (std::size_t j = 0; j < n; ++j) terms[j] = std::polar(1.0, table.r_values[j] * logX);
  return pairwise_sum(terms);
}

std::vector<StxRow> stx_bound_report(const EigenvalueTable& table, const std::vector<double>& T_grid,
                                     const std::vector<double>& X_grid) {
  if (table.r_values.empty()) throw DomainError("stx_bound_report: empty table");
  std::vector<StxRow> out;
  for (double T : T_grid)
    for (double X : X_grid) {
      StxRow row{T, X, std::abs(spectral_sum(table, T, X)), 0};
      row.ratio = row.magnitude / (T * T * std::pow(X, 0.25));
      out.push_back(row);
    }
  return out;
}

double spectral_terms(const EigenvalueTable& table, double X, double T) {
  const auto n = static_cast<std::size_t>(table.count_up_to(T));
  const double logX = std::log(X);
  std::vector<double> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> s(1.0, table.r_values[j]);
    terms[j] = 2.0 * (X * std::polar(1.0, table.r_values[j] * logX) / s).real();
  }
  return pairwise_sum(terms);
}

ResidualReport explicit_formula_residual(const EigenvalueTable& table, double X, double T, double geodesic_psi) {
  if (!(X > 1) || !(T > 0)) throw DomainError("explicit_formula_residual: need X > 1 and T > 0");
  ResidualReport out;
  out.regime_ok = T <= std::sqrt(X);
  out.residual = std::abs(geodesic_psi - X * X / 2.0 - spectral_terms(table, X, T));
  out.band = X * X * std::log(X) / T;
  return out;
}

std::complex<double> smoothed_spectral_term(double r, double X, const KernelSpec& k) {
  const std::complex<double> s(1.0, r);
  const double Y = k.Y();
  const auto part = [&](bool imag) {
    return integrate(
        [&](double u) {
          const std::complex<double> v = std::pow(X + u, s) / s * k.density(u);
          return imag ? v.imag() : v.real();
        },
        Y, 2.0 * Y);
  };
  return {part(false), part(true)};
}

SmoothedSpectral smoothed_spectral_side(const EigenvalueTable& table, double X, double T, const KernelSpec& k,
                                        double xi) {
  const double Y = k.Y();
  SmoothedSpectral out;
  out.regime_ok = T * Y > std::pow(X, 1.0 + xi);
  out.main = integrate([&](double u) { return 0.5 * (X + u) * (X + u) * k.density(u); }, Y, 2.0 * Y);
  const auto n = static_cast<std::size_t>(table.count_up_to(T));
  std::vector<double> terms(n);
  for (std::size_t j = 0; j < n; ++j) terms[j] = 2.0 * smoothed_spectral_term(table.r_values[j], X, k).real();
  out.value = out.main + pairwise_sum(terms);
  return out;
}

FitResult weyl_fit(const EigenvalueTable& table) {
  if (table.r_values.size() < 2 || table.r_values.back() < 10.0 * table.r_values.front())
    throw DomainError("weyl_fit: data spans less than a decade");
  std::vector<std::pair<double, double>> samples;
  const double lo = table.r_values.front(), hi = table.r_values.back();
  // Upper half of the range on a log grid; the count is noisy near the bottom.
  for (int k = 0; k <= 10; ++k) {
    const double T = std::sqrt(lo * hi) * std::pow(std::sqrt(hi / lo), k / 10.0);
    samples.emplace_back(T, static_cast<double>(table.count_up_to(T)));
  }
  return fit_exponent(samples);
}

}  // namespace pgt
