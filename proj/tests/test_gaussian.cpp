#include <doctest.h>

#include <random>
#include <set>

#include "pgt/gaussian.hpp"

using namespace pgt;

namespace {

// Brute-force divisor test: d | n iff n/d has integer components.
bool divides_naive(GaussianInt d, GaussianInt n) {
  const auto N = d.norm();
  const GaussianInt t = n * d.conj();
  return t.re % N == 0 && t.im % N == 0;
}

std::vector<GaussianInt> all_divisors_naive(GaussianInt n) {
  std::vector<GaussianInt> out;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n.norm()))) + 1;
  for (std::int64_t a = 1; a <= r; ++a)
    for (std::int64_t b = 0; b <= r; ++b)
      if (divides_naive({a, b}, n)) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("canonical representatives") {
  CHECK(canonical_rep({-2, 0}).value() == GaussianInt{2, 0});
  CHECK(canonical_rep({0, 5}).value() == GaussianInt{5, 0});
  CHECK(canonical_rep({1, -1}).value() == GaussianInt{1, 1});
  CHECK_THROWS_AS(canonical_rep({0, 0}), DomainError);
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      const auto c = canonical_rep({a, b});
      CHECK(c.value().re > 0);
      CHECK(c.value().im >= 0);
      CHECK(canonical_rep(c.value()) == c);
      CHECK(associate_unit({a, b}) * c.value() == GaussianInt{a, b});
    }
}

TEST_CASE("overflow guard") {
  CHECK_THROWS_AS(check_guard({kComponentLimit, 0}), LimitError);
  CHECK_NOTHROW(check_guard({kComponentLimit - 1, 0}));
}

TEST_CASE("rounded division") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int k = 0; k < 2000; ++k) {
    const GaussianInt a{d(rng), d(rng)}, b{d(rng), d(rng)};
    if (b.is_zero()) continue;
    const auto qr = divmod_round(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(2 * qr.remainder.norm() <= b.norm());
  }
  // 1/2 rounds to 0 and 3/2 to 2 (even neighbour).
  CHECK(divmod_round({1, 0}, {2, 0}).quotient == GaussianInt{0, 0});
  CHECK(divmod_round({3, 0}, {2, 0}).quotient == GaussianInt{2, 0});
}

TEST_CASE("gcd") {
  CHECK(gcd({5, 0}, {3, 0}).value() == GaussianInt{1, 0});
  CHECK(gcd({0, 0}, {-3, 3}) == canonical_rep({-3, 3}));
  CHECK_THROWS_AS(gcd({0, 0}, {0, 0}), DomainError);
  // Oracle: the largest-norm common divisor found by exhaustive search.
  const GaussianInt a{3, 1}, b{1, 1};
  GaussianInt best{1, 0};
  for (const auto& d : all_divisors_naive(a))
    if (divides_naive(d, b) && d.norm() > best.norm()) best = d;
  CHECK(gcd(a, b) == canonical_rep(best));
  CHECK(gcd(a, b).value() == GaussianInt{1, 1});
  const auto e = extended_gcd({7, 4}, {3, -5});
  CHECK(GaussianInt{7, 4} * e.x + GaussianInt{3, -5} * e.y == e.g.value());
}

TEST_CASE("inverse modulo") {
  const GaussianInt m{5, 2};
  const ResidueRing ring(m);
  for (std::int64_t i = 1; i < ring.size(); ++i) {
    const auto a = ring.element(i);
    const auto inv = inverse_mod(a, m);
    CHECK(ring.reduce(a * inv) == ring.reduce({1, 0}));
  }
  CHECK_THROWS_AS(inverse_mod({1, 1}, {2, 0}), DomainError);
}

TEST_CASE("factorization") {
  const auto two = factor(GaussianInt{2, 0});
  CHECK(two.unit == GaussianInt{0, -1});
  REQUIRE(two.factors.size() == 1);
  CHECK(two.factors[0].prime.value() == GaussianInt{1, 1});
  CHECK(two.factors[0].exponent == 2);
  const auto five = factor(GaussianInt{5, 0});
  REQUIRE(five.factors.size() == 2);
  CHECK(five.factors[0].prime.norm() == 5);
  CHECK(five.factors[1].prime.norm() == 5);
  CHECK(five.factors[0].prime != five.factors[1].prime);
  const auto three = factor(GaussianInt{3, 0});
  REQUIRE(three.factors.size() == 1);
  CHECK(three.factors[0].prime.value() == GaussianInt{3, 0});
  CHECK(three.factors[0].exponent == 1);
  CHECK_THROWS_AS(factor(GaussianInt{0, 0}), DomainError);

  for (std::int64_t a = -100; a <= 100; ++a)
    for (std::int64_t b = -100; b <= 100; ++b) {
      if ((a == 0 && b == 0) || a * a + b * b > 10000) continue;
      const auto f = factor(GaussianInt{a, b});
      REQUIRE(f.reassemble() == GaussianInt{a, b});
      for (std::size_t k = 0; k < f.factors.size(); ++k) {
        const auto n = static_cast<std::uint64_t>(f.factors[k].prime.norm());
        const bool ok = n == 2 || is_prime_u64(n) ||
                        (f.factors[k].prime.value().im == 0 && is_prime_u64(f.factors[k].prime.value().re) &&
                         f.factors[k].prime.value().re % 4 == 3);
        CHECK(ok);
        if (k > 0) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
      }
    }
}

TEST_CASE("multiplicative functions: values") {
  CHECK(mobius(canonical_rep({1, 0})) == 1);
  CHECK(mobius(canonical_rep({1, 1})) == -1);
  CHECK(mobius(canonical_rep({2, 0})) == 0);
  CHECK(euler_phi(canonical_rep({1, 1})) == 1);
  CHECK(euler_phi(canonical_rep({3, 0})) == 8);
  // Oracle: residues {0, 1, i, 1+i} mod 2 coprime to 2.
  {
    const ResidueRing ring({2, 0});
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < ring.size(); ++i)
      if (gcd(ring.element(i), {2, 0}).norm() == 1) ++count;
    CHECK(count == 2);
    CHECK(euler_phi(canonical_rep({2, 0})) == 2);
  }
  CHECK(sigma_xi(canonical_rep({1, 1}), 1.0).real() == doctest::Approx(3.0));
  CHECK(divisor_count(canonical_rep({2, 0})) == 3);
  CHECK(static_cast<std::int64_t>(all_divisors_naive({6, 0}).size()) == 6);
  CHECK(divisor_count(canonical_rep({6, 0})) == 6);
}

TEST_CASE("multiplicative functions: identities up to norm 1e4") {
  const auto ideals = ideals_up_to(10000);
  for (const auto& n : ideals) {
    const auto divs = ideal_divisors(n);
    int mu_sum = 0;
    double phi_ratio = 0;
    for (const auto& d : divs) {
      mu_sum += mobius(d);
      phi_ratio += mobius(d) / static_cast<double>(d.norm());
    }
    REQUIRE(mu_sum == (n.norm() == 1 ? 1 : 0));
    REQUIRE(static_cast<double>(euler_phi(n)) / static_cast<double>(n.norm()) ==
            doctest::Approx(phi_ratio).epsilon(1e-12));
    REQUIRE(static_cast<std::int64_t>(divs.size()) == divisor_count(n));
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
  int tested = 0;
  while (tested < 300) {
    const auto a = ideals[pick(rng)], b = ideals[pick(rng)];
    const GaussianInt ab = a.value() * b.value();
    if (gcd(a.value(), b.value()).norm() != 1 || ab.norm() > 10000) continue;
    ++tested;
    const auto c = canonical_rep(ab);
    CHECK(mobius(c) == mobius(a) * mobius(b));
    CHECK(euler_phi(c) == euler_phi(a) * euler_phi(b));
    CHECK(divisor_count(c) == divisor_count(a) * divisor_count(b));
    const std::complex<double> xi(-0.3, 0.7);
    CHECK(std::abs(sigma_xi(c, xi) - sigma_xi(a, xi) * sigma_xi(b, xi)) < 1e-9);
  }
}

TEST_CASE("ideal enumeration") {
  const auto ideals = ideals_up_to(500);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t a = 1; a <= 23; ++a)
    for (std::int64_t b = 0; b <= 23; ++b)
      if (a * a + b * b <= 500) seen.insert({a, b});
  CHECK(ideals.size() == seen.size());
  for (std::size_t k = 1; k < ideals.size(); ++k) CHECK(ideals[k - 1] < ideals[k]);
}

TEST_CASE("residue ring") {
  for (const auto& m : ideals_up_to(60)) {
    const ResidueRing ring(m.value());
    CHECK(ring.size() == m.norm());
    for (std::int64_t i = 0; i < ring.size(); ++i) {
      const auto x = ring.element(i);
      CHECK(ring.index(x) == i);
      CHECK(ring.index(x + m.value() * GaussianInt{3, -2}) == i);
    }
  }
}

TEST_CASE("rational helpers") {
  CHECK(is_prime_u64(1'000'000'007ULL));
  CHECK_FALSE(is_prime_u64(1'000'000'007ULL * 3));
  const auto f = factor_u64(360);
  CHECK(f == std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  for (std::uint64_t p : {5ULL, 13ULL, 10009ULL}) {
    const auto r = sqrt_minus_one(p);
    CHECK(mulmod_u64(r, r, p) == p - 1);
  }
  // Jacobi symbol against Euler's criterion for primes and a product.
  for (std::uint64_t a = 0; a < 50; ++a) {
    const int e = static_cast<int>(powmod_u64(a, 15, 31));
    CHECK(jacobi_u64(a, 31) == (e == 30 ? -1 : e));
    CHECK(jacobi_u64(a, 21) == legendre_u64(a, 3) * legendre_u64(a, 7));
  }
}

TEST_CASE("parsing") {
  CHECK(parse_gaussian("3") == GaussianInt{3, 0});
  CHECK(parse_gaussian("-2i") == GaussianInt{0, -2});
  CHECK(parse_gaussian("1+2i") == GaussianInt{1, 2});
  CHECK(parse_gaussian("3 - i") == GaussianInt{3, -1});
  CHECK(to_string(GaussianInt{3, -1}) == "3-i");
  CHECK_THROWS_AS(parse_gaussian("x"), DomainError);
}
