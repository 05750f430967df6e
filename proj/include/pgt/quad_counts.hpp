// quad_counts.hpp
//
// The counting functions
//   rho_q(delta)    = #{ x mod 2q : x^2 = delta mod 4q },
//   lambda_q(delta) = sum_{q1^2 q2 q3 = q} mu(q2) rho_q3(delta),
// their averages over traces n (delta = n^2 - 4), and Kloosterman sums over
// Z[i] together with the identities tying them to rho.
//
// For delta = n^2 - 4 the substitution x = 2y + n gives
//   rho_q(n^2 - 4) = #{ y mod q : y^2 + n y + 1 = 0 mod q },
// which is multiplicative in q and is what rho_fast evaluates prime power
// by prime power.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgt/gaussian.hpp"
#include "pgt/parallel.hpp"

namespace pgt {

/// A discriminant, optionally remembering the trace n with delta = n^2 - 4.
struct Discriminant {
  GaussianInt delta;
  std::optional<GaussianInt> trace;

  static Discriminant from_trace(GaussianInt n);
  static Discriminant from_delta(GaussianInt delta) { return {delta, std::nullopt}; }
};

/// Largest N(2q) accepted by the enumeration routines.
inline constexpr std::int64_t kBruteforceNormLimit = 1'000'000;

/// Exact count by enumerating all N(2q) residues x mod 2q.
std::int64_t rho_bruteforce(const CanonicalIdealRep& q, GaussianInt delta);

/// #{ y mod q : y^2 + n y + 1 = 0 mod q } by enumerating residues mod q.
std::int64_t rho_by_trace_bruteforce(const CanonicalIdealRep& q, GaussianInt n);

/// rho_{pi^k}(n^2 - 4) by the closed form (pi odd, pi not dividing delta) or
/// by lifting roots of y^2 + n y + 1 from pi^j to pi^(j+1).
std::int64_t rho_prime_power(const CanonicalIdealRep& pi, int k, GaussianInt n);

/// rho_q(n^2 - 4) as a product of prime-power counts.
std::int64_t rho_fast(const CanonicalIdealRep& q, GaussianInt n);

enum class RhoMethod { fast, bruteforce };

/// rho_q for a discriminant; `fast` needs a known trace and falls back to
/// enumeration otherwise.
std::int64_t rho(const CanonicalIdealRep& q, const Discriminant& d, RhoMethod method = RhoMethod::fast);

/// Exact convolution over all ideal factorizations q1^2 q2 q3 = q.
std::int64_t lambda(const CanonicalIdealRep& q, const Discriminant& d, RhoMethod method = RhoMethod::fast);

/// lambda_{pi^k}(n^2 - 4) from prime-power rho values (lambda is
/// multiplicative in q).
std::int64_t lambda_prime_power(const CanonicalIdealRep& pi, int k, GaussianInt n);

/// sum_{q1^2 q2 = q} mu(q2) / N(q2): the average of lambda_q(n^2 - 4) over n.
double lambda_average(const CanonicalIdealRep& q);

struct LambdaPartialSum {
  CanonicalIdealRep q;
  double Z = 0;
  std::int64_t sum = 0;   // sum over elements n with 0 < N(n) <= Z
  double main = 0;        // pi Z lambda_average(q)
  double remainder = 0;   // sum - main
};

/// Sum of lambda_q(n^2 - 4) over Gaussian integers n (every associate
/// counted separately) with 0 < N(n) <= Z.
LambdaPartialSum lambda_partial_sum(const CanonicalIdealRep& q, double Z,
                                    Execution exec = Execution::parallel);

/// Cumulative sums S(m) = sum_{0 < N(n) <= m} lambda_q(n^2 - 4) for all
/// integers 0 <= m <= max_norm.
std::vector<std::int64_t> lambda_partial_sum_profile(const CanonicalIdealRep& q, std::int64_t max_norm,
                                                     Execution exec = Execution::parallel);

/// sup over real t in [lo, hi] of |S(t) - pi t lambda_average(q)|, from a
/// profile covering hi. The sup is attained at an integer or just before one.
double sup_remainder(const std::vector<std::int64_t>& profile, double average, std::int64_t lo,
                     std::int64_t hi);

struct KloostermanValue {
  GaussianInt m, n;
  CanonicalIdealRep c;
  std::complex<double> value;
};

/// S(m, n, c) = sum over a in (Z[i]/c)^* of e(<m, a/c>) e(<n, a^-1/c>),
/// with <x, y> = Re(x conj y). Phases are reduced exactly as integers mod N(c).
KloostermanValue kloosterman(GaussianInt m, GaussianInt n, const CanonicalIdealRep& c);

/// |S(m,n,c)| / (|(m,n,c)| d(c) N(c)^{1/2}), where |(m,n,c)| = N(gcd)^{1/2}.
double weil_ratio(const KloostermanValue& s);

/// |sum_{b mod q} rho_q(b^2-4) e(<k, b/q>) - S(k, k, q)|, both sides by
/// enumeration.
double kloosterman_identity_check(const CanonicalIdealRep& q, GaussianInt k);

/// sum_{b mod q} rho_q(b^2 - 4), exactly.
std::int64_t rho_residue_sum(const CanonicalIdealRep& q);

}  // namespace pgt
