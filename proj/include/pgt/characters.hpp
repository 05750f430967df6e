// characters.hpp
//
// Quadratic residue symbols modulo Gaussian primes, the split delta ~ D l^2
// into a fundamental-discriminant generator and conductor part, and the
// quadratic character chi_D as a completely multiplicative function on
// ideals.
//
// Convention for chi_D (the literature leaves the ramified prime open):
//   * odd prime pi:   chi_D(pi) = (D / pi), computed by Euler's criterion;
//   * the prime (1+i): a value in {-1, 0, +1} pinned by matching the Euler
//     factors of sum lambda_q(delta) N(q)^-s against T_l(s) L(s, chi_D) at
//     q = (1+i)^k; the 2-part of l is pinned by the same equations.
// D is kept as the exact quotient delta / l^2, unit included, so that
// (D/pi) = (delta/pi) for every odd pi not dividing l.

#pragma once

#include <string>

#include "pgt/gaussian.hpp"
#include "pgt/ideal_table.hpp"
#include "pgt/quad_counts.hpp"

namespace pgt {

/// (n / pi) for an odd Gaussian prime pi: 0 if pi | n, +1 if n is a nonzero
/// square mod pi, -1 otherwise. Throws DomainError if pi is not an odd prime.
int residue_symbol(GaussianInt n, const CanonicalIdealRep& pi);

/// Same symbol for a tabulated prime, via Z[i]/(pi) = F_p (split), the norm
/// map to F_p (inert) or the trivial ring at (1+i) (returns 0 or 1 there).
int residue_symbol(GaussianInt n, const PrimeIdeal& pi);

/// True when n = u m^2 with u in {1, -1} (the unit squares).
bool is_perfect_square(GaussianInt n);

struct DiscriminantSplit {
  GaussianInt delta;
  GaussianInt D;            // exactly delta / l^2
  CanonicalIdealRep l;
  int even_value = 0;       // chi_D((1+i)) pinned alongside
  int twos_in_l = 0;        // exponent of (1+i) in l
};

struct PinReport {
  bool consistent = false;
  int even_value = 0;
  int unit_value = 0;
  int max_power_checked = 0;  // k in (1+i)^k
  std::string detail;
};

/// Pins chi_D((1+i)) and validates constancy on associates for the
/// candidate delta = D l^2. Never guesses: `consistent` is false when no
/// value in {-1, 0, +1} reproduces the coefficient equations.
///
/// The equations are checked at q = (1+i)^k for k <= min(v + 6, 17), v the
/// exponent of (1+i) in delta, at powers of the odd primes dividing delta
/// and at one odd split prime. lambda comes from `method` (brute force
/// unless the discriminant carries its trace).
PinReport pin_even_unit_values(const Discriminant& d, GaussianInt D, const CanonicalIdealRep& l,
                               RhoMethod method = RhoMethod::bruteforce);
inline PinReport pin_even_unit_values(GaussianInt delta, GaussianInt D, const CanonicalIdealRep& l) {
  return pin_even_unit_values(Discriminant::from_delta(delta), D, l);
}

/// Throws DomainError for zero or perfect-square delta, and when no 2-part
/// assignment is consistent. With a trace attached, the pinning uses the
/// exact prime-power lambda instead of enumeration.
DiscriminantSplit discriminant_split(const Discriminant& d);
inline DiscriminantSplit discriminant_split(GaussianInt delta) {
  return discriminant_split(Discriminant::from_delta(delta));
}

class QuadraticCharacter {
 public:
  /// The principal character (chi = 1 on every ideal).
  static QuadraticCharacter trivial();
  /// Character attached to a validated split.
  static QuadraticCharacter from_split(const DiscriminantSplit& split);
  /// Character from D alone with an explicit even value; unvalidated until
  /// validate() succeeds.
  QuadraticCharacter(GaussianInt D, int even_value);

  /// Checks unit_value == +1 on a sample of odd primes; returns validity.
  bool validate();

  [[nodiscard]] const GaussianInt& D() const { return D_; }
  [[nodiscard]] int even_value() const { return even_value_; }
  [[nodiscard]] int unit_value() const { return unit_value_; }
  [[nodiscard]] bool validated() const { return validated_; }

  [[nodiscard]] int at_prime(const CanonicalIdealRep& pi) const;
  [[nodiscard]] int at_prime(const PrimeIdeal& pi) const;

 private:
  QuadraticCharacter() = default;
  GaussianInt D_{1, 0};
  int even_value_ = 1;
  int unit_value_ = 0;
  bool validated_ = false;
};

/// chi_D(n) by complete multiplicativity. Throws DomainError when the
/// character is not validated.
int chi(const QuadraticCharacter& character, const CanonicalIdealRep& n);

}  // namespace pgt
