// lfunctions.hpp
//
// Dirichlet series over Q(i), all in the ideal convention (one term per
// ideal, not per element): the Dedekind zeta function, L(s, chi_D), the
// finite factor T_l(s), the smoothed value
//   G_V(delta) = sum_q lambda_q(delta) exp(-N(q)/V) / N(q)
// of Zagier's L(1, delta), and the coefficient identity
//   sum_q lambda_q(delta) N(q)^-s = T_l(s) L(s, chi_D).
//
// T_l(s) = sum_{d | l} chi_D(d) mu(d) N(d)^-s sigma_{1-2s}(l/d). The
// exponent 1-2s is the one for which the coefficient identity holds over
// the integers; see szmidt_coefficient for the coefficient form.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pgt/characters.hpp"
#include "pgt/gaussian.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quad_counts.hpp"

namespace pgt {

struct SeriesValue {
  std::complex<double> value;
  double tail_bound = 0;  // bound on the omitted tail (zeta) or the V-doubling band (L)
  double V = 0;           // final smoothing scale, 0 for sharp cutoffs
  bool converged = true;
};

/// Partial sum of zeta_{Q(i)}(s) over ideals of norm <= cutoff, with an
/// integral-comparison bound on the tail. Requires Re(s) >= 1.2.
SeriesValue zeta_qi(std::complex<double> s, std::int64_t cutoff);

/// Tail bound used by zeta_qi: an upper bound for sum_{N(q) > X} N(q)^-sigma.
double zeta_qi_tail_bound(double sigma, double X);

/// sum_q chi(q) exp(-N(q)/V) N(q)^-s over N(q) <= 40V, for a single V.
std::complex<double> L_chi_smoothed(std::complex<double> s, const QuadraticCharacter& chi, double V);

/// L_chi_smoothed at V, 2V, 4V, 8V; `tail_bound` is the last change and
/// `converged` is false when it exceeds tol.
SeriesValue L_chi(std::complex<double> s, const QuadraticCharacter& chi, double V, double tol = 1e-6);

/// Conductor f of chi_D. The odd part is the product of the odd primes
/// dividing D to an odd power. The exponent at (1+i) depends only on the
/// square class of D in Q_2(i)^*, i.e. on (v mod 2, D/(1+i)^v mod (1+i)^5);
/// each of those classes is resolved once by requiring the approximate
/// functional equation to be independent of its split parameter.
struct Conductor {
  std::int64_t odd_norm = 1;
  int two_exponent = 0;
  /// A = |d_{Q(i)}| N(f) = 4 N(f).
  [[nodiscard]] double analytic() const;
};
Conductor conductor(const QuadraticCharacter& chi);

/// L(1, chi) for nontrivial chi from the approximate functional equation
///   L(1) = sum_q chi(q) [ exp(-c x_q) / N(q) + (2 pi / sqrt A) E_1(x_q / c) ],
/// x_q = 2 pi N(q) / sqrt A, root number +1. Terms are kept while either
/// argument is below 37.
double L1_afe(const QuadraticCharacter& chi, const Conductor& f, double c = 1.0);

/// |L1_afe(c = 1) - L1_afe(c = 1.3)|: rounding-sized only for the right conductor.
double afe_discrepancy(const QuadraticCharacter& chi, const Conductor& f);

struct ZagierValue {
  GaussianInt n;
  DiscriminantSplit split;
  Conductor f;
  double T_l = 0;  // T_l(1)
  double L = 0;    // L(1, chi_D)
  double value = 0;
};

/// L(1, n^2 - 4) = T_l(1) L(1, chi_D), exact up to floating point.
ZagierValue zagier_L1_exact(GaussianInt n);

/// T_l(s) by enumeration of the ideal divisors of l.
std::complex<double> T_l_poly(std::complex<double> s, const QuadraticCharacter& chi, const CanonicalIdealRep& l);

/// q-th coefficient of T_l(s) L(s, chi):
///   sum_{m | q} t(m) chi(q/m),  t(m) = sum_{d e^2 = m, d | l, e | l/d} chi(d) mu(d) N(e).
/// Uses the character's prime values directly (no validation needed).
std::int64_t szmidt_coefficient(const CanonicalIdealRep& q, const QuadraticCharacter& chi,
                                const CanonicalIdealRep& l);

struct SzmidtReport {
  DiscriminantSplit split;
  std::int64_t ideals_checked = 0;
  std::int64_t max_deviation = 0;
  CanonicalIdealRep worst;  // first ideal attaining max_deviation
};

/// Compares brute-force lambda_q(delta) with szmidt_coefficient for every
/// ideal with N(q) <= Qmax (Qmax <= 10^4).
SzmidtReport szmidt_coefficient_check(GaussianInt delta, std::int64_t Qmax);

struct SmoothedValue {
  GaussianInt delta;
  double V = 0;
  double value = 0;          // G_V(delta)
  double tail_estimate = 0;  // bound on the terms beyond N(q) = 40V
  double sigma_contour = 0.5;
};

/// Precomputed exp(-N/V)/N for N = 1..40V; shared across many deltas.
class SmoothingWeights {
 public:
  explicit SmoothingWeights(double V);
  [[nodiscard]] double V() const { return V_; }
  [[nodiscard]] std::int64_t max_norm() const { return max_norm_; }
  [[nodiscard]] double operator()(std::int64_t norm) const { return w_[static_cast<std::size_t>(norm)]; }

 private:
  double V_;
  std::int64_t max_norm_;
  std::vector<double> w_;
};

/// G_V(n^2 - 4) with lambda from its prime-power values, one pass over the
/// ideal table.
SmoothedValue zagier_L1(GaussianInt n, double V, Execution exec = Execution::serial);
SmoothedValue zagier_L1(GaussianInt n, const SmoothingWeights& w, Execution exec = Execution::serial);

/// Same sum with lambda_q from quad_counts::lambda term by term, one
/// factorization per ideal. Reference for zagier_L1; slow.
SmoothedValue zagier_L1_reference(GaussianInt n, double V, RhoMethod method = RhoMethod::fast);

/// Estimate of sum_{N(q) > 40V} |lambda_q| exp(-N/V)/N taking |lambda_q| <= N(q)
/// and the ideal count per unit of norm bounded by pi/4 + 1.
double smoothed_tail_bound(double V);

/// sum_q exp(-N(q)/V)/N(q) sum_{q1^2 q2 = q} mu(q2)/N(q2) over N(q) <= 40V.
double normalization_sum(double V, Execution exec = Execution::parallel);

struct RVBound {
  double density_term = 0;    // N(M) Q^{10(1-sigma)/(3-sigma)}
  double smoothing_term = 0;  // card V^{sigma-1} Q^theta
  [[nodiscard]] double total() const { return density_term + smoothing_term; }
};

/// The aggregate bound for sum over a set M of |R_V|, as a formula only.
RVBound R_V_bound(double sigma, double V, double Q, double card, double NM, double theta);

struct RVEstimate {
  double proxy = 0;  // |G_V - G_{8V}|
  RVBound bound;     // for a single delta: card = N(M) = 1, Q = N(delta)
  double sigma = 0.5;
};

/// Empirical R_V proxy with the formula bound attached for reporting.
RVEstimate R_V_estimate(GaussianInt n, double V, double sigma = 0.5, double theta = 1.0 / 6.0);

}  // namespace pgt
