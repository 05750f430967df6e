// spectral.hpp
//
// Spectral parameters r_j (lambda_j = 1 + r_j^2) read from a text file, the
// exponential sum S(T, X) = sum_{0 < r_j <= T} X^{i r_j}, and both sides of
// the explicit formula for Psi.
//
// File format: one positive decimal r_j per line, ascending; lines starting
// with '#' are comments; "# source: <text>" sets the provenance string.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pgt/fit.hpp"
#include "pgt/kernel.hpp"

namespace pgt {

struct EigenvalueTable {
  std::vector<double> r_values;
  std::string source;
  std::uint64_t checksum = 0;  // FNV-1a 64 of the file bytes

  [[nodiscard]] std::int64_t count_up_to(double T) const;
};

/// Throws DomainError naming the offending line.
EigenvalueTable load_eigenvalues(const std::string& path);
EigenvalueTable parse_eigenvalues(const std::string& text, const std::string& origin = "<memory>");

std::complex<double> spectral_sum(const EigenvalueTable& table, double T, double X);

struct StxRow {
  double T = 0, X = 0;
  double magnitude = 0;  // |S(T, X)|
  double ratio = 0;      // |S| / (T^2 X^{1/4})
};

std::vector<StxRow> stx_bound_report(const EigenvalueTable& table, const std::vector<double>& T_grid,
                                     const std::vector<double>& X_grid);

/// 2 Re sum_{r_j <= T} X^{1 + i r_j} / (1 + i r_j).
double spectral_terms(const EigenvalueTable& table, double X, double T);

struct ResidualReport {
  double residual = 0;  // |psi - X^2/2 - spectral_terms|
  double band = 0;      // X^2 log X / T
  bool regime_ok = true;  // T <= sqrt(X)
};

ResidualReport explicit_formula_residual(const EigenvalueTable& table, double X, double T, double geodesic_psi);

struct SmoothedSpectral {
  double value = 0;
  double main = 0;        // integral of (X+u)^2/2 k(u)
  bool regime_ok = true;  // T Y > X^{1 + xi}
};

/// integral of (X+u)^2/2 + 2 Re sum (X+u)^{1+ir_j}/(1+ir_j) against k.
SmoothedSpectral smoothed_spectral_side(const EigenvalueTable& table, double X, double T, const KernelSpec& k,
                                        double xi = 0.1);

/// integral of (X+u)^{1+ir}/(1+ir) k(u) du, for the integration-by-parts decay check.
std::complex<double> smoothed_spectral_term(double r, double X, const KernelSpec& k);

/// Fit of #{r_j <= T} against T over the upper half (log scale) of the
/// table's range. Throws when the data spans less than a decade.
FitResult weyl_fit(const EigenvalueTable& table);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace pgt
