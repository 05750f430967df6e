#include <doctest.h>

#include <random>

#include "pgt/fit.hpp"
#include "pgt/quad_counts.hpp"
#include "pgt/sweep_constants.hpp"

using namespace pgt;

TEST_CASE("rho: small cases") {
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b) {
      const GaussianInt n{a, b};
      CHECK(rho_bruteforce(CanonicalIdealRep{}, n * n - GaussianInt{4, 0}) == 1);
      CHECK(rho_fast(CanonicalIdealRep{}, n) == 1);
    }
  const auto q = canonical_rep({2, 1});
  CHECK(rho_bruteforce(q, {5, 0}) == rho_by_trace_bruteforce(q, {3, 0}));
  CHECK(rho_by_trace_bruteforce(q, {3, 0}) == 1);  // y^2 + 3y + 1 = (y + 4)^2 mod 5 over F_5
  CHECK_THROWS_AS(rho_bruteforce(canonical_rep({1000, 1}), {5, 0}), LimitError);
}

TEST_CASE("rho: fast path against enumeration") {
  const auto ideals = ideals_up_to(200);
  std::vector<GaussianInt> traces;
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b)
      if (a * a + b * b <= 40) traces.push_back({a, b});
  for (const auto& q : ideals)
    for (const auto& n : traces) {
      const auto fast = rho_fast(q, n);
      REQUIRE(fast == rho_by_trace_bruteforce(q, n));
      if (q.norm() <= 60) REQUIRE(fast == rho_bruteforce(q, n * n - GaussianInt{4, 0}));
    }
  // Prime powers up to norm 1e6 against enumeration.
  for (const GaussianInt p : {GaussianInt{1, 1}, GaussianInt{2, 1}, GaussianInt{3, 0}})
    for (int k = 1; std::pow(static_cast<double>(p.norm()), k) <= 1e4; ++k) {
      GaussianInt pk{1, 0};
      for (int j = 0; j < k; ++j) pk = pk * p;
      for (const GaussianInt n : {GaussianInt{3, 0}, GaussianInt{1, 1}, GaussianInt{2, 1}, GaussianInt{4, 0}})
        CHECK(rho_prime_power(canonical_rep(p), k, n) == rho_by_trace_bruteforce(canonical_rep(pk), n));
    }
}

TEST_CASE("rho: random dual enumeration") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-30, 30), t(-8, 8);
  for (int k = 0; k < 20; ++k) {
    GaussianInt qv{c(rng), c(rng)};
    if (qv.is_zero() || qv.norm() * 4 > kBruteforceNormLimit) continue;
    const GaussianInt n{t(rng), t(rng)};
    const auto q = canonical_rep(qv);
    CHECK(rho_bruteforce(q, n * n - GaussianInt{4, 0}) == rho_by_trace_bruteforce(q, n));
  }
}

TEST_CASE("lambda") {
  const auto d = Discriminant::from_trace({3, 0});
  CHECK(lambda(CanonicalIdealRep{}, d) == 1);
  for (const auto& pi : {canonical_rep({2, 1}), canonical_rep({3, 0}), canonical_rep({1, 1}), canonical_rep({3, 2})})
    CHECK(lambda(pi, d) == rho(pi, d) - 1);
  const auto t = canonical_rep({1, 1});
  const auto t2 = canonical_rep({0, 2});
  CHECK(lambda(t2, d) == rho(t2, d) - rho(t, d) + 1);
  // Fast and enumerated lambda agree, and match the prime-power form.
  for (const auto& q : ideals_up_to(120)) {
    REQUIRE(lambda(q, d, RhoMethod::fast) == lambda(q, d, RhoMethod::bruteforce));
    const auto f = factor(q);
    std::int64_t prod = 1;
    for (const auto& pp : f.factors) prod *= lambda_prime_power(pp.prime, pp.exponent, {3, 0});
    REQUIRE(prod == lambda(q, d));
  }
}

TEST_CASE("lambda partial sums") {
  const auto r = lambda_partial_sum(CanonicalIdealRep{}, 100.0);
  // Oracle: lattice points with 0 < a^2 + b^2 <= 100.
  std::int64_t count = 0;
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b)
      if (a * a + b * b > 0 && a * a + b * b <= 100) ++count;
  CHECK(r.sum == count);
  CHECK(r.main == doctest::Approx(M_PI * 100));

  const auto big = lambda_partial_sum(CanonicalIdealRep{}, 1e4);
  CHECK(std::abs(big.remainder) <= std::pow(1e4, 131.0 / 416 + 0.05));

  // Serial and parallel profiles match, and the profile ends at the direct sum.
  const auto q = canonical_rep({3, 0});
  const auto ps = lambda_partial_sum_profile(q, 3000, Execution::serial);
  const auto pp = lambda_partial_sum_profile(q, 3000, Execution::parallel);
  CHECK(ps == pp);
  CHECK(ps.back() == lambda_partial_sum(q, 3000.0).sum);

  std::vector<std::pair<double, double>> samples;
  const auto prof = lambda_partial_sum_profile(q, 100000);
  for (double Z : {1e3, 1e4, 1e5})
    samples.emplace_back(Z, sup_remainder(prof, lambda_average(q), static_cast<std::int64_t>(Z / 2),
                                          static_cast<std::int64_t>(Z)));
  CHECK(fit_exponent(samples).slope < 0.5);
}

TEST_CASE("lambda average") {
  CHECK(lambda_average(CanonicalIdealRep{}) == doctest::Approx(1.0));
  // q prime: the only decomposition is q1 = 1, q2 = pi.
  CHECK(lambda_average(canonical_rep({2, 1})) == doctest::Approx(-0.2));
  // q = pi^2: (1, pi^2) gives 0, (pi, 1) gives 1.
  CHECK(lambda_average(canonical_rep(GaussianInt{2, 1} * GaussianInt{2, 1})) == doctest::Approx(1.0));
}

TEST_CASE("kloosterman sums") {
  for (const auto& c : ideals_up_to(80)) {
    const auto s0 = kloosterman({0, 0}, {0, 0}, c);
    CHECK(s0.value.real() == doctest::Approx(static_cast<double>(euler_phi(c))));
    CHECK(std::abs(s0.value.imag()) < 1e-9);
    const auto s = kloosterman({1, 2}, {1, 2}, c);
    CHECK(std::abs(s.value.imag()) < 1e-8);
    CHECK(std::abs(s.value) <= euler_phi(c) + 1e-8);
    CHECK(weil_ratio(kloosterman({2, -1}, {3, 1}, c)) <= sweep::kWeilConstant);
  }
  CHECK(kloosterman({0, 0}, {0, 0}, canonical_rep({1, 1})).value.real() == doctest::Approx(1.0));
}

TEST_CASE("Kloosterman identity and residue sums") {
  for (const auto& q : ideals_up_to(300)) REQUIRE(rho_residue_sum(q) == euler_phi(q));
  CHECK(kloosterman_identity_check(CanonicalIdealRep{}, {0, 0}) < 1e-12);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> c(-9, 9);
  for (int k = 0; k < 25; ++k) {
    GaussianInt qv{c(rng), c(rng)};
    if (qv.is_zero() || qv.norm() > 100) continue;
    const auto q = canonical_rep(qv);
    CHECK(kloosterman_identity_check(q, {0, 0}) < 1e-9);
    CHECK(kloosterman_identity_check(q, {c(rng), c(rng)}) < 1e-8);
  }
}
