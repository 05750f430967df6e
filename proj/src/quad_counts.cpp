#include "pgt/quad_counts.hpp"

#include <cmath>
#include <numbers>

#include <omp.h>

namespace pgt {

namespace {

using i128 = __int128;

GaussianInt square_plus_trace(GaussianInt y, GaussianInt n, const ResidueRing& ring) {
  // y^2 + n y + 1 reduced mod the ring's modulus
  const GaussianInt yr = ring.reduce(y);
  return ring.reduce(ring.mul(yr, yr) + ring.mul(ring.reduce(n), yr) + GaussianInt{1, 0});
}

void require_enumerable(std::int64_t norm, const char* what) {
  if (norm > kBruteforceNormLimit)
    throw LimitError(std::string(what) + ": modulus norm " + std::to_string(norm) + " exceeds enumeration limit");
}

// Roots of y^2 + n y + 1 mod pi^k, lifted one power at a time.
std::int64_t lift_count(const CanonicalIdealRep& pi, int k, GaussianInt n) {
  const ResidueRing base(pi.value());
  std::vector<GaussianInt> roots;
  for (std::int64_t i = 0; i < base.size(); ++i) {
    const GaussianInt y = base.element(i);
    if (base.is_zero(square_plus_trace(y, n, base))) roots.push_back(y);
  }
  GaussianInt modulus = pi.value();
  for (int j = 1; j < k && !roots.empty(); ++j) {
    const GaussianInt next_mod = modulus * pi.value();
    const ResidueRing next(next_mod);
    std::vector<GaussianInt> lifted;
    for (const auto& y : roots) {
      for (std::int64_t t = 0; t < base.size(); ++t) {
        const GaussianInt cand = next.reduce(y + base.element(t) * modulus);
        if (next.is_zero(square_plus_trace(cand, n, next))) lifted.push_back(cand);
      }
    }
    roots = std::move(lifted);
    modulus = next_mod;
  }
  return static_cast<std::int64_t>(roots.size());
}

std::int64_t lambda_local(const CanonicalIdealRep& pi, int k, GaussianInt n) {
  // sum over a <= k/2 and b in {0,1}: (-1)^b rho_{pi^(k-2a-b)}
  std::vector<std::int64_t> rho_pow(static_cast<std::size_t>(k) + 1);
  rho_pow[0] = 1;
  for (int j = 1; j <= k; ++j) rho_pow[j] = rho_prime_power(pi, j, n);
  std::int64_t out = 0;
  for (int a = 0; 2 * a <= k; ++a) {
    const int r = k - 2 * a;
    out += rho_pow[r];
    if (r >= 1) out -= rho_pow[r - 1];
  }
  return out;
}

std::int64_t rho_fast_factored(const Factorization& f, GaussianInt n) {
  std::int64_t out = 1;
  for (const auto& pp : f.factors) {
    out *= rho_prime_power(pp.prime, pp.exponent, n);
    if (out == 0) return 0;
  }
  return out;
}

// lambda_q(b^2 - 4) for each residue b mod q, indexed by the ring's index.
std::vector<std::int64_t> lambda_by_residue(const CanonicalIdealRep& q) {
  const ResidueRing ring(q.value());
  std::vector<std::int64_t> out(static_cast<std::size_t>(ring.size()));
  for (std::int64_t i = 0; i < ring.size(); ++i) out[i] = lambda(q, Discriminant::from_trace(ring.element(i)));
  return out;
}

}  // namespace

Discriminant Discriminant::from_trace(GaussianInt n) { return {n * n - GaussianInt{4, 0}, n}; }

std::int64_t rho_bruteforce(const CanonicalIdealRep& q, GaussianInt delta) {
  const GaussianInt two_q = GaussianInt{2, 0} * q.value();
  require_enumerable(two_q.norm(), "rho_bruteforce");
  const ResidueRing mod2q(two_q);
  const ResidueRing mod4q(GaussianInt{4, 0} * q.value());
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < mod2q.size(); ++i) {
    const GaussianInt x = mod2q.element(i);
    if (mod4q.is_zero(mod4q.mul(x, x) - mod4q.reduce(delta))) ++count;
  }
  return count;
}

std::int64_t rho_by_trace_bruteforce(const CanonicalIdealRep& q, GaussianInt n) {
  require_enumerable(q.norm(), "rho_by_trace_bruteforce");
  const ResidueRing ring(q.value());
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < ring.size(); ++i)
    if (ring.is_zero(square_plus_trace(ring.element(i), n, ring))) ++count;
  return count;
}

std::int64_t rho_prime_power(const CanonicalIdealRep& pi, int k, GaussianInt n) {
  if (k <= 0) return 1;
  const GaussianInt delta = n * n - GaussianInt{4, 0};
  if (pi.norm() != 2 && !divides(pi.value(), delta)) {
    // Simple roots lift uniquely: 1 + (delta / pi) for every k.
    const ResidueRing ring(pi.value());
    const GaussianInt r = ring.pow(delta, static_cast<std::uint64_t>((ring.size() - 1) / 2));
    return r == ring.reduce({1, 0}) ? 2 : 0;
  }
  return lift_count(pi, k, n);
}

std::int64_t rho_fast(const CanonicalIdealRep& q, GaussianInt n) { return rho_fast_factored(factor(q), n); }

std::int64_t rho(const CanonicalIdealRep& q, const Discriminant& d, RhoMethod method) {
  if (method == RhoMethod::fast && d.trace) return rho_fast(q, *d.trace);
  return rho_bruteforce(q, d.delta);
}

std::int64_t lambda(const CanonicalIdealRep& q, const Discriminant& d, RhoMethod method) {
  const auto f = factor(q);
  if (method == RhoMethod::fast && d.trace) {
    std::int64_t out = 1;
    for (const auto& pp : f.factors) out *= lambda_local(pp.prime, pp.exponent, *d.trace);
    return out;
  }
  // Direct convolution: q = q1^2 q2 q3 with q2 squarefree.
  std::int64_t total = 0;
  const std::size_t m = f.factors.size();
  auto recurse = [&](auto&& self, std::size_t i, int mu, GaussianInt q3) -> void {
    if (i == m) {
      total += mu * rho(canonical_rep(q3), d, method);
      return;
    }
    const auto& pp = f.factors[i];
    for (int e1 = 0; 2 * e1 <= pp.exponent; ++e1) {
      for (int e2 = 0; e2 <= 1 && 2 * e1 + e2 <= pp.exponent; ++e2) {
        GaussianInt next = q3;
        for (int t = 0; t < pp.exponent - 2 * e1 - e2; ++t) next = next * pp.prime.value();
        self(self, i + 1, e2 ? -mu : mu, next);
      }
    }
  };
  recurse(recurse, 0, 1, GaussianInt{1, 0});
  return total;
}

std::int64_t lambda_prime_power(const CanonicalIdealRep& pi, int k, GaussianInt n) {
  if (k <= 0) return 1;
  return lambda_local(pi, k, n);
}

double lambda_average(const CanonicalIdealRep& q) {
  double out = 1.0;
  for (const auto& pp : factor(q).factors)
    if (pp.exponent % 2 == 1) out *= -1.0 / static_cast<double>(pp.prime.norm());
  return out;
}

std::vector<std::int64_t> lambda_partial_sum_profile(const CanonicalIdealRep& q, std::int64_t max_norm,
                                                     Execution exec) {
  if (max_norm < 0) throw DomainError("lambda_partial_sum_profile: negative norm");
  if (max_norm > (std::int64_t{1} << 32)) throw LimitError("lambda_partial_sum_profile: norm too large");
  const ResidueRing ring(q.value());
  const auto values = lambda_by_residue(q);
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_norm))) + 1;

  // Per-norm totals; integer sums, so any thread split gives the same result.
  std::vector<std::int64_t> by_norm(static_cast<std::size_t>(max_norm) + 1, 0);
  auto row = [&](std::int64_t x, std::vector<std::int64_t>& acc) {
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t nn = x * x + y * y;
      if (nn == 0 || nn > max_norm) continue;
      acc[static_cast<std::size_t>(nn)] += values[static_cast<std::size_t>(ring.index({x, y}))];
    }
  };
  if (exec == Execution::serial) {
    for (std::int64_t x = -r; x <= r; ++x) row(x, by_norm);
  } else {
#pragma omp parallel num_threads(thread_count())
    {
      std::vector<std::int64_t> local(by_norm.size(), 0);
#pragma omp for schedule(static)
      for (std::int64_t x = -r; x <= r; ++x) row(x, local);
#pragma omp critical
      for (std::size_t i = 0; i < local.size(); ++i) by_norm[i] += local[i];
    }
  }
  for (std::size_t i = 1; i < by_norm.size(); ++i) by_norm[i] += by_norm[i - 1];
  return by_norm;
}

LambdaPartialSum lambda_partial_sum(const CanonicalIdealRep& q, double Z, Execution exec) {
  if (!(Z >= 1)) throw DomainError("lambda_partial_sum: Z must be >= 1");
  const auto m = static_cast<std::int64_t>(std::floor(Z));
  const auto profile = lambda_partial_sum_profile(q, m, exec);
  LambdaPartialSum out;
  out.q = q;
  out.Z = Z;
  out.sum = profile.back();
  out.main = std::numbers::pi * Z * lambda_average(q);
  out.remainder = static_cast<double>(out.sum) - out.main;
  return out;
}

double sup_remainder(const std::vector<std::int64_t>& profile, double average, std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || hi < lo || hi >= static_cast<std::int64_t>(profile.size()))
    throw DomainError("sup_remainder: window outside profile");
  const double slope = std::numbers::pi * average;
  double best = 0;
  for (std::int64_t m = lo; m <= hi; ++m) {
    const auto s = static_cast<double>(profile[static_cast<std::size_t>(m)]);
    best = std::max(best, std::abs(s - slope * static_cast<double>(m)));
    if (m < hi) best = std::max(best, std::abs(s - slope * static_cast<double>(m + 1)));
  }
  return best;
}

KloostermanValue kloosterman(GaussianInt m, GaussianInt n, const CanonicalIdealRep& c) {
  require_enumerable(c.norm(), "kloosterman");
  const ResidueRing ring(c.value());
  const std::int64_t N = ring.size();
  const GaussianInt cbar = c.value().conj();
  // <x, a/c> = Re(conj(x) a conj(c)) / N(c); reduce that integer mod N(c).
  auto phase = [&](GaussianInt x, GaussianInt a) {
    const i128 re = i128{a.re} * cbar.re - i128{a.im} * cbar.im;
    const i128 im = i128{a.re} * cbar.im + i128{a.im} * cbar.re;
    i128 t = (i128{x.re} * re + i128{x.im} * im) % N;
    if (t < 0) t += N;
    return static_cast<std::int64_t>(t);
  };
  std::vector<std::int64_t> histogram(static_cast<std::size_t>(N), 0);
  if (N == 1) histogram[0] = 1;  // the single residue class is a unit
  for (std::int64_t i = 0; i < N && N > 1; ++i) {
    const GaussianInt a = ring.element(i);
    if (gcd(a, c.value()).norm() != 1) continue;
    const GaussianInt ainv = ring.reduce(inverse_mod(a, c.value()));
    histogram[static_cast<std::size_t>((phase(m, a) + phase(n, ainv)) % N)] += 1;
  }
  CompensatedSum<std::complex<double>> acc;
  for (std::int64_t t = 0; t < N; ++t) {
    if (histogram[t] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(N);
    acc.add(static_cast<double>(histogram[t]) * std::complex<double>(std::cos(angle), std::sin(angle)));
  }
  return {m, n, c, acc.value()};
}

double weil_ratio(const KloostermanValue& s) {
  GaussianInt g = s.c.value();
  if (!s.m.is_zero() || !s.n.is_zero()) g = gcd(gcd(s.m, s.n).value(), s.c.value()).value();
  const double denom = std::sqrt(static_cast<double>(g.norm())) * static_cast<double>(divisor_count(s.c)) *
                       std::sqrt(static_cast<double>(s.c.norm()));
  return std::abs(s.value) / denom;
}

double kloosterman_identity_check(const CanonicalIdealRep& q, GaussianInt k) {
  if (q.norm() > 10'000) throw LimitError("kloosterman_identity_check: N(q) > 10^4");
  const ResidueRing ring(q.value());
  const std::int64_t N = ring.size();
  const auto f = factor(q);
  const GaussianInt qbar = q.value().conj();
  CompensatedSum<std::complex<double>> lhs;
  for (std::int64_t i = 0; i < N; ++i) {
    const GaussianInt b = ring.element(i);
    const std::int64_t r = rho_fast_factored(f, b);
    if (r == 0) continue;
    // <k, b/q> = Re(conj(k) b conj(q)) / N(q)
    const GaussianInt bq = b * qbar;
    i128 t = (i128{k.re} * bq.re + i128{k.im} * bq.im) % N;
    if (t < 0) t += N;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(N);
    lhs.add(static_cast<double>(r) * std::complex<double>(std::cos(angle), std::sin(angle)));
  }
  return std::abs(lhs.value() - kloosterman(k, k, q).value);
}

std::int64_t rho_residue_sum(const CanonicalIdealRep& q) {
  require_enumerable(q.norm(), "rho_residue_sum");
  const ResidueRing ring(q.value());
  const auto f = factor(q);
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < ring.size(); ++i) total += rho_fast_factored(f, ring.element(i));
  return total;
}

}  // namespace pgt
