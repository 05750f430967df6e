#include "pgt/characters.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pgt/lfunctions.hpp"
#include "pgt/quad_counts.hpp"

namespace pgt {

namespace {

const GaussianInt kOnePlusI{1, 1};

bool is_odd_prime(const CanonicalIdealRep& pi) {
  const auto n = static_cast<std::uint64_t>(pi.norm());
  if (n == 2) return false;
  if (is_prime_u64(n)) return true;
  const auto& v = pi.value();
  return v.im == 0 && v.re % 4 == 3 && is_prime_u64(static_cast<std::uint64_t>(v.re));
}

int euler_symbol(GaussianInt n, GaussianInt modulus) {
  const ResidueRing ring(modulus);
  if (ring.is_zero(n)) return 0;
  const auto e = static_cast<std::uint64_t>((ring.size() - 1) / 2);
  const GaussianInt r = ring.pow(n, e);
  if (r == ring.reduce({1, 0})) return 1;
  if (r == ring.reduce({-1, 0})) return -1;
  throw DomainError("residue_symbol: Euler criterion gave neither +1 nor -1 mod " + to_string(modulus));
}

int valuation(GaussianInt n, GaussianInt pi) {
  int k = 0;
  while (divides(pi, n)) {
    n = exact_div(n, pi);
    ++k;
  }
  return k;
}

// Coefficient of T_l L at (1+i)^k and at powers of one odd prime, compared
// with brute-force lambda.
struct PinTarget {
  CanonicalIdealRep q;
  std::int64_t lambda;
};

std::vector<PinTarget> pin_targets(const Discriminant& d, int max_k, RhoMethod method) {
  const GaussianInt delta = d.delta;
  std::vector<PinTarget> out;
  GaussianInt q{1, 0};
  for (int k = 1; k <= max_k; ++k) {
    q = q * kOnePlusI;
    const auto c = canonical_rep(q);
    out.push_back({c, lambda(c, d, method)});
  }
  // Odd primes dividing delta, up to two powers beyond their exponent.
  for (const auto& pp : factor(delta).factors) {
    if (pp.prime.norm() == 2) continue;
    GaussianInt power{1, 0};
    for (int k = 1; k <= pp.exponent + 2; ++k) {
      power = power * pp.prime.value();
      if (4 * power.norm() > kBruteforceNormLimit) break;
      const auto c = canonical_rep(power);
      out.push_back({c, lambda(c, d, method)});
    }
  }
  // One odd split prime coprime to delta.
  for (std::uint64_t p = 5;; p += 4) {
    if (!is_prime_u64(p)) continue;
    const auto pi = prime_above(p);
    if (divides(pi.value(), delta)) continue;
    out.push_back({pi, lambda(pi, d, method)});
    const auto pi2 = canonical_rep(pi.value() * pi.value());
    out.push_back({pi2, lambda(pi2, d, method)});
    break;
  }
  return out;
}

bool matches(const std::vector<PinTarget>& targets, const QuadraticCharacter& chi, const CanonicalIdealRep& l) {
  return std::all_of(targets.begin(), targets.end(),
                     [&](const PinTarget& t) { return szmidt_coefficient(t.q, chi, l) == t.lambda; });
}

// Odd primes coprime to 2D used to check constancy on associates.
std::vector<CanonicalIdealRep> sample_primes(GaussianInt D, int count) {
  std::vector<CanonicalIdealRep> out;
  for (std::uint64_t p = 3; static_cast<int>(out.size()) < count; p += 2) {
    if (!is_prime_u64(p)) continue;
    const auto pi = prime_above(p);
    if (divides(pi.value(), D)) continue;
    out.push_back(pi);
    if (p % 4 == 1) {
      const auto bar = canonical_rep(pi.value().conj());
      if (!divides(bar.value(), D)) out.push_back(bar);
    }
  }
  return out;
}

int unit_value_for(GaussianInt D) {
  // The symbol (D / u pi) computed from each generator u pi of the same
  // prime ideal must agree.
  for (const auto& pi : sample_primes(D, 8)) {
    const int base = euler_symbol(D, pi.value());
    for (int k = 1; k < 4; ++k)
      if (euler_symbol(D, unit_power(k) * pi.value()) != base) return -1;
  }
  return 1;
}

}  // namespace

int residue_symbol(GaussianInt n, const CanonicalIdealRep& pi) {
  if (pi.norm() == 2) throw DomainError("residue_symbol: (1+i) is not an odd prime");
  if (!is_odd_prime(pi)) throw DomainError("residue_symbol: " + to_string(pi.value()) + " is not prime");
  return euler_symbol(n, pi.value());
}

int residue_symbol(GaussianInt n, const PrimeIdeal& pi) {
  const std::uint64_t p = pi.p;
  auto mod = [p](std::int64_t x) {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((x % m) + m) % m);
  };
  switch (pi.kind) {
    case PrimeKind::ramified:
      return divides(pi.rep, n) ? 0 : 1;
    case PrimeKind::split: {
      const std::uint64_t v = (mod(n.re) + mulmod_u64(mod(n.im), pi.root, p)) % p;
      return legendre_u64(v, p);
    }
    case PrimeKind::inert: {
      // x^((p^2-1)/2) = N(x)^((p-1)/2), so x is a square in F_{p^2} iff
      // N(x) is a square in F_p.
      const std::uint64_t a = mod(n.re), b = mod(n.im);
      return legendre_u64((mulmod_u64(a, a, p) + mulmod_u64(b, b, p)) % p, p);
    }
  }
  return 0;
}

bool is_perfect_square(GaussianInt n) {
  if (n.is_zero()) return true;
  const auto f = factor(n);
  for (const auto& pp : f.factors)
    if (pp.exponent % 2 != 0) return false;
  return f.unit == GaussianInt{1, 0} || f.unit == GaussianInt{-1, 0};
}

PinReport pin_even_unit_values(const Discriminant& d, GaussianInt D, const CanonicalIdealRep& l,
                               RhoMethod method) {
  PinReport report;
  const int v = valuation(d.delta, kOnePlusI);
  report.max_power_checked = std::min(v + 6, 17);
  const auto targets = pin_targets(d, report.max_power_checked, method);

  std::vector<int> order;
  if (divides(kOnePlusI, D)) order = {0};
  else order = {-1, 1, 0};

  std::ostringstream detail;
  for (int ev : order) {
    QuadraticCharacter chi(D, ev);
    if (matches(targets, chi, l)) {
      report.consistent = true;
      report.even_value = ev;
      report.unit_value = unit_value_for(D);
      detail << "even value " << ev << " matches " << targets.size() << " coefficients";
      if (report.unit_value != 1) {
        report.consistent = false;
        detail << "; symbol not constant on associates";
      }
      report.detail = detail.str();
      return report;
    }
  }
  report.detail = "no value at (1+i) reproduces the coefficients of lambda";
  return report;
}

DiscriminantSplit discriminant_split(const Discriminant& d) {
  const GaussianInt delta = d.delta;
  const RhoMethod method = d.trace ? RhoMethod::fast : RhoMethod::bruteforce;
  if (delta.is_zero()) throw DomainError("discriminant_split: delta = 0");
  if (is_perfect_square(delta)) throw DomainError("discriminant_split: " + to_string(delta) + " is a perfect square");

  const auto f = factor(delta);
  GaussianInt l_odd{1, 0};
  int v = 0;
  for (const auto& pp : f.factors) {
    if (pp.prime.norm() == 2) {
      v = pp.exponent;
      continue;
    }
    for (int k = 0; k < pp.exponent / 2; ++k) l_odd = l_odd * pp.prime.value();
  }

  // Prefer the largest 2-part that is consistent.
  for (int j = v / 2; j >= 0; --j) {
    GaussianInt l = l_odd;
    for (int k = 0; k < j; ++k) l = l * kOnePlusI;
    const auto lc = canonical_rep(l);
    const GaussianInt D = exact_div(delta, lc.value() * lc.value());
    const auto pin = pin_even_unit_values(d, D, lc, method);
    if (pin.consistent) return {delta, D, lc, pin.even_value, j};
  }
  throw DomainError("discriminant_split: no consistent 2-part for " + to_string(delta));
}

QuadraticCharacter QuadraticCharacter::trivial() {
  QuadraticCharacter c;
  c.validated_ = true;
  c.unit_value_ = 1;
  return c;
}

QuadraticCharacter QuadraticCharacter::from_split(const DiscriminantSplit& split) {
  QuadraticCharacter c(split.D, split.even_value);
  if (!c.validate()) throw DomainError("character for " + to_string(split.D) + " failed validation");
  return c;
}

QuadraticCharacter::QuadraticCharacter(GaussianInt D, int even_value) : D_(D), even_value_(even_value) {
  if (D.is_zero()) throw DomainError("QuadraticCharacter: D = 0");
  if (even_value < -1 || even_value > 1) throw DomainError("QuadraticCharacter: even value outside {-1,0,1}");
}

bool QuadraticCharacter::validate() {
  if (divides(kOnePlusI, D_) && even_value_ != 0) {
    validated_ = false;
    return false;
  }
  unit_value_ = unit_value_for(D_);
  validated_ = unit_value_ == 1;
  return validated_;
}

int QuadraticCharacter::at_prime(const CanonicalIdealRep& pi) const {
  if (D_ == GaussianInt{1, 0}) return 1;
  if (pi.norm() == 2) return even_value_;
  return euler_symbol(D_, pi.value());
}

int QuadraticCharacter::at_prime(const PrimeIdeal& pi) const {
  if (D_ == GaussianInt{1, 0}) return 1;
  if (pi.kind == PrimeKind::ramified) return even_value_;
  return residue_symbol(D_, pi);
}

int chi(const QuadraticCharacter& character, const CanonicalIdealRep& n) {
  if (!character.validated()) throw DomainError("chi: character not validated");
  int out = 1;
  for (const auto& pp : factor(n).factors) {
    const int c = character.at_prime(pp.prime);
    if (c == 0) return 0;
    if (pp.exponent % 2 == 1) out *= c;
  }
  return out;
}

}  // namespace pgt
