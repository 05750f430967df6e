// gaussian.hpp
//
// Exact arithmetic in Z[i]: elements, canonical ideal generators, Euclidean
// division, factorization, and the multiplicative functions mu, phi, d and
// sigma_xi on ideals.
//
// Every arithmetic function below is a function of the ideal (n), so it takes
// a CanonicalIdealRep: the unique associate with re > 0 and im >= 0.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgt {

/// Invalid mathematical input (zero where a nonzero element is required, a
/// perfect-square discriminant, a parameter outside its range, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A size guard or desk-scale cutoff was exceeded.
struct LimitError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Components must stay below this bound so that norms fit in 63 bits.
inline constexpr std::int64_t kComponentLimit = std::int64_t{1} << 31;

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussianInt() = default;
  constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  [[nodiscard]] constexpr bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] constexpr GaussianInt conj() const { return {re, -im}; }
  [[nodiscard]] constexpr bool is_unit() const {
    return (re == 0 && (im == 1 || im == -1)) || (im == 0 && (re == 1 || re == -1));
  }

  /// N(a+bi) = a^2 + b^2, evaluated in 128-bit arithmetic.
  [[nodiscard]] std::int64_t norm() const;

  friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(GaussianInt a, GaussianInt b);
GaussianInt operator-(GaussianInt a, GaussianInt b);
GaussianInt operator-(GaussianInt a);
GaussianInt operator*(GaussianInt a, GaussianInt b);

std::string to_string(GaussianInt z);
/// Parses "3", "-2i", "1+2i", "3-i" (whitespace ignored).
GaussianInt parse_gaussian(const std::string& text);

/// Throws LimitError when |re| or |im| reaches 2^31.
void check_guard(GaussianInt z);

/// i^k for any integer k.
GaussianInt unit_power(int k);

/// The first-quadrant associate of a nonzero element, viewed as the
/// generator of the ideal it spans.
class CanonicalIdealRep {
 public:
  /// The unit ideal (1).
  constexpr CanonicalIdealRep() = default;

  [[nodiscard]] const GaussianInt& value() const { return value_; }
  [[nodiscard]] std::int64_t norm() const { return value_.norm(); }

  friend bool operator==(const CanonicalIdealRep&, const CanonicalIdealRep&) = default;
  /// Orders by (norm, re), which is total on canonical representatives.
  friend bool operator<(const CanonicalIdealRep& a, const CanonicalIdealRep& b);

  friend CanonicalIdealRep canonical_rep(GaussianInt n);

 private:
  explicit constexpr CanonicalIdealRep(GaussianInt v) : value_(v) {}
  GaussianInt value_{1, 0};
};

/// Unique associate with re > 0, im >= 0. Throws DomainError on zero.
CanonicalIdealRep canonical_rep(GaussianInt n);

/// The unit u with n = u * canonical_rep(n).
GaussianInt associate_unit(GaussianInt n);

struct DivMod {
  GaussianInt quotient;
  GaussianInt remainder;
};

/// Rounded division a = q b + r with N(r) <= N(b)/2. Each component of
/// a/b is rounded to the nearest integer; exact halves go to the even
/// neighbour (re first, then im, independently).
DivMod divmod_round(GaussianInt a, GaussianInt b);

[[nodiscard]] bool divides(GaussianInt d, GaussianInt n);
/// n / d, throwing DomainError unless d | n exactly.
GaussianInt exact_div(GaussianInt n, GaussianInt d);

/// Generator of the ideal (a, b). Throws DomainError if both are zero.
CanonicalIdealRep gcd(GaussianInt a, GaussianInt b);

struct ExtendedGcd {
  CanonicalIdealRep g;
  GaussianInt x;  // a*x + b*y == g.value()
  GaussianInt y;
};
ExtendedGcd extended_gcd(GaussianInt a, GaussianInt b);

/// Inverse of a modulo (m); throws DomainError when gcd(a, m) != 1.
GaussianInt inverse_mod(GaussianInt a, GaussianInt m);

struct PrimePower {
  CanonicalIdealRep prime;
  int exponent = 0;
};

struct Factorization {
  GaussianInt unit{1, 0};
  std::vector<PrimePower> factors;  // sorted by (norm, re), pairwise non-associate

  /// unit * prod prime^exponent; reproduces the factored element exactly.
  [[nodiscard]] GaussianInt reassemble() const;
};

Factorization factor(GaussianInt n);
inline Factorization factor(const CanonicalIdealRep& n) { return factor(n.value()); }

/// The Gaussian prime above a rational prime p: (1+i) for p = 2, p itself for
/// p = 3 mod 4, and one of the two conjugate primes for p = 1 mod 4.
CanonicalIdealRep prime_above(std::uint64_t p);

int mobius(const CanonicalIdealRep& n);
std::int64_t euler_phi(const CanonicalIdealRep& n);
std::int64_t divisor_count(const CanonicalIdealRep& n);
/// sum over ideal divisors d of N(d)^xi.
std::complex<double> sigma_xi(const CanonicalIdealRep& n, std::complex<double> xi);

/// All ideal divisors of n, sorted by (norm, re).
std::vector<CanonicalIdealRep> ideal_divisors(const CanonicalIdealRep& n);
std::vector<CanonicalIdealRep> ideal_divisors(const Factorization& f);

/// All canonical ideals with 0 < N(q) <= max_norm, sorted by (norm, re).
std::vector<CanonicalIdealRep> ideals_up_to(std::int64_t max_norm);

// --- rational-integer helpers -----------------------------------------------

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);
/// Prime factorization as (p, e) pairs in increasing p: trial division up to
/// 10^6, then Miller-Rabin / Pollard rho on the cofactor.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
/// Legendre symbol (a/p) for an odd prime p.
int legendre_u64(std::uint64_t a, std::uint64_t p);
/// Jacobi symbol (a/n) for odd n, by binary reciprocity.
int jacobi_u64(std::uint64_t a, std::uint64_t n);
/// A square root of -1 modulo a prime p = 1 mod 4.
std::uint64_t sqrt_minus_one(std::uint64_t p);

/// The residue ring Z[i]/(m) with the Hermite-normal-form representatives
/// {u + v i : 0 <= u < N(m)/g, 0 <= v < g}, g = gcd(re m, im m).
/// Residues are addressed by index u*g + v in [0, N(m)).
class ResidueRing {
 public:
  explicit ResidueRing(GaussianInt modulus);

  [[nodiscard]] std::int64_t size() const { return size_; }
  [[nodiscard]] const GaussianInt& modulus() const { return modulus_; }

  [[nodiscard]] GaussianInt reduce(GaussianInt x) const;
  [[nodiscard]] std::int64_t index(GaussianInt x) const;
  [[nodiscard]] GaussianInt element(std::int64_t idx) const;
  [[nodiscard]] bool is_zero(GaussianInt x) const;

  [[nodiscard]] GaussianInt mul(GaussianInt a, GaussianInt b) const;
  [[nodiscard]] GaussianInt pow(GaussianInt a, std::uint64_t e) const;

 private:
  GaussianInt modulus_;
  std::int64_t size_ = 1;
  std::int64_t g_ = 1;         // imaginary period
  std::int64_t period_ = 1;    // real period N/g
  std::int64_t shift_re_ = 0;  // lattice vector (shift_re_, g_)
};

}  // namespace pgt
