#include "pgt/gaussian.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>

namespace pgt {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw LimitError("Gaussian integer component overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to num/den (den > 0), halves to even.
i128 round_half_even(i128 num, i128 den) {
  i128 q = floor_div128(num, den);
  i128 rem = num - q * den;
  if (2 * rem > den) return q + 1;
  if (2 * rem == den) return (q % 2 == 0) ? q : q + 1;
  return q;
}

}  // namespace

std::int64_t GaussianInt::norm() const {
  const i128 r = re, i = im;
  return narrow(r * r + i * i);
}

GaussianInt operator+(GaussianInt a, GaussianInt b) {
  return {narrow(i128{a.re} + b.re), narrow(i128{a.im} + b.im)};
}
GaussianInt operator-(GaussianInt a, GaussianInt b) {
  return {narrow(i128{a.re} - b.re), narrow(i128{a.im} - b.im)};
}
GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
GaussianInt operator*(GaussianInt a, GaussianInt b) {
  return {narrow(i128{a.re} * b.re - i128{a.im} * b.im),
          narrow(i128{a.re} * b.im + i128{a.im} * b.re)};
}

std::string to_string(GaussianInt z) {
  if (z.im == 0) return std::to_string(z.re);
  std::string imag;
  if (z.im == 1) imag = "i";
  else if (z.im == -1) imag = "-i";
  else imag = std::to_string(z.im) + "i";
  if (z.re == 0) return imag;
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + imag;
}

GaussianInt parse_gaussian(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty Gaussian integer");

  GaussianInt out;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (any) {
      throw DomainError("malformed Gaussian integer: " + text);
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::int64_t mag = 1;
    bool has_digits = pos > start;
    if (has_digits) mag = std::stoll(s.substr(start, pos - start));
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
      ++pos;
      out.im += sign * mag;
    } else {
      if (!has_digits) throw DomainError("malformed Gaussian integer: " + text);
      out.re += sign * mag;
    }
    any = true;
  }
  check_guard(out);
  return out;
}

void check_guard(GaussianInt z) {
  if (z.re >= kComponentLimit || z.re <= -kComponentLimit || z.im >= kComponentLimit ||
      z.im <= -kComponentLimit)
    throw LimitError("Gaussian integer component exceeds 2^31: " + to_string(z));
}

GaussianInt unit_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

bool operator<(const CanonicalIdealRep& a, const CanonicalIdealRep& b) {
  const auto na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  return a.value_.re < b.value_.re;
}

CanonicalIdealRep canonical_rep(GaussianInt n) {
  if (n.is_zero()) throw DomainError("canonical_rep of zero");
  GaussianInt z = n;
  for (int k = 0; k < 4; ++k) {
    if (z.re > 0 && z.im >= 0) return CanonicalIdealRep(z);
    z = GaussianInt{-z.im, z.re};  // multiply by i
  }
  throw DomainError("canonical_rep: unreachable");
}

GaussianInt associate_unit(GaussianInt n) {
  const GaussianInt c = canonical_rep(n).value();
  for (int k = 0; k < 4; ++k)
    if (unit_power(k) * c == n) return unit_power(k);
  throw DomainError("associate_unit: unreachable");
}

DivMod divmod_round(GaussianInt a, GaussianInt b) {
  if (b.is_zero()) throw DomainError("division by zero");
  const i128 nb = i128{b.re} * b.re + i128{b.im} * b.im;
  // a * conj(b)
  const i128 xr = i128{a.re} * b.re + i128{a.im} * b.im;
  const i128 xi = i128{a.im} * b.re - i128{a.re} * b.im;
  const GaussianInt q{narrow(round_half_even(xr, nb)), narrow(round_half_even(xi, nb))};
  const i128 rr = i128{a.re} - (i128{q.re} * b.re - i128{q.im} * b.im);
  const i128 ri = i128{a.im} - (i128{q.re} * b.im + i128{q.im} * b.re);
  return {q, {narrow(rr), narrow(ri)}};
}

bool divides(GaussianInt d, GaussianInt n) {
  if (d.is_zero()) return n.is_zero();
  const i128 nd = i128{d.re} * d.re + i128{d.im} * d.im;
  const i128 xr = i128{n.re} * d.re + i128{n.im} * d.im;
  const i128 xi = i128{n.im} * d.re - i128{n.re} * d.im;
  return xr % nd == 0 && xi % nd == 0;
}

GaussianInt exact_div(GaussianInt n, GaussianInt d) {
  if (d.is_zero()) throw DomainError("division by zero");
  const i128 nd = i128{d.re} * d.re + i128{d.im} * d.im;
  const i128 xr = i128{n.re} * d.re + i128{n.im} * d.im;
  const i128 xi = i128{n.im} * d.re - i128{n.re} * d.im;
  if (xr % nd != 0 || xi % nd != 0)
    throw DomainError(to_string(d) + " does not divide " + to_string(n));
  return {narrow(xr / nd), narrow(xi / nd)};
}

CanonicalIdealRep gcd(GaussianInt a, GaussianInt b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    GaussianInt r = divmod_round(a, b).remainder;
    a = b;
    b = r;
  }
  return canonical_rep(a);
}

ExtendedGcd extended_gcd(GaussianInt a, GaussianInt b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  GaussianInt r0 = a, r1 = b;
  GaussianInt x0{1, 0}, x1{0, 0};
  GaussianInt y0{0, 0}, y1{1, 0};
  while (!r1.is_zero()) {
    const auto [q, r] = divmod_round(r0, r1);
    r0 = r1;
    r1 = r;
    GaussianInt xt = x0 - q * x1;
    x0 = x1;
    x1 = xt;
    GaussianInt yt = y0 - q * y1;
    y0 = y1;
    y1 = yt;
  }
  // r0 = u * canonical; rescale coefficients by u^{-1} = conj(u).
  const GaussianInt u = associate_unit(r0);
  const GaussianInt uinv = u.conj();
  return {canonical_rep(r0), x0 * uinv, y0 * uinv};
}

GaussianInt inverse_mod(GaussianInt a, GaussianInt m) {
  const auto eg = extended_gcd(a, m);
  if (eg.g.norm() != 1) throw DomainError(to_string(a) + " is not invertible mod " + to_string(m));
  return divmod_round(eg.x, m).remainder;
}

GaussianInt Factorization::reassemble() const {
  GaussianInt out = unit;
  for (const auto& pp : factors)
    for (int k = 0; k < pp.exponent; ++k) out = out * pp.prime.value();
  return out;
}

// --- rational integers -------------------------------------------------------

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("factor_u64(0)");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (auto p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

int legendre_u64(std::uint64_t a, std::uint64_t p) { return jacobi_u64(a, p); }

int jacobi_u64(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    const int z = std::countr_zero(a);
    a >>= z;
    if ((z & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
  if (p % 4 != 1) throw DomainError("sqrt(-1) mod p needs p = 1 mod 4");
  for (std::uint64_t c = 2;; ++c) {
    if (legendre_u64(c, p) == -1) return powmod_u64(c, (p - 1) / 4, p);
  }
}

CanonicalIdealRep prime_above(std::uint64_t p) {
  if (p == 2) return canonical_rep({1, 1});
  if (p % 4 == 3) return canonical_rep({static_cast<std::int64_t>(p), 0});
  const auto x = sqrt_minus_one(p);
  return gcd({static_cast<std::int64_t>(p), 0}, {static_cast<std::int64_t>(x), 1});
}

Factorization factor(GaussianInt n) {
  if (n.is_zero()) throw DomainError("factor(0)");
  check_guard(n);
  Factorization out;
  GaussianInt rest = n;
  auto strip = [&rest](const CanonicalIdealRep& pi) {
    int k = 0;
    while (divides(pi.value(), rest)) {
      rest = exact_div(rest, pi.value());
      ++k;
    }
    return k;
  };
  for (const auto& [p, e] : factor_u64(static_cast<std::uint64_t>(n.norm()))) {
    if (p == 2 || p % 4 == 3) {
      const auto pi = prime_above(p);
      const int k = strip(pi);
      out.factors.push_back({pi, k});
    } else {
      const auto pi = prime_above(p);
      const auto pibar = canonical_rep(pi.value().conj());
      const int k1 = strip(pi);
      const int k2 = strip(pibar);
      if (k1 > 0) out.factors.push_back({pi, k1});
      if (k2 > 0) out.factors.push_back({pibar, k2});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  if (!rest.is_unit()) throw DomainError("factor: residual non-unit for " + to_string(n));
  out.unit = rest;
  return out;
}

int mobius(const CanonicalIdealRep& n) {
  const auto f = factor(n);
  for (const auto& pp : f.factors)
    if (pp.exponent > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::int64_t euler_phi(const CanonicalIdealRep& n) {
  std::int64_t out = 1;
  for (const auto& pp : factor(n).factors) {
    const std::int64_t q = pp.prime.norm();
    out *= q - 1;
    for (int k = 1; k < pp.exponent; ++k) out *= q;
  }
  return out;
}

std::int64_t divisor_count(const CanonicalIdealRep& n) {
  std::int64_t out = 1;
  for (const auto& pp : factor(n).factors) out *= pp.exponent + 1;
  return out;
}

std::complex<double> sigma_xi(const CanonicalIdealRep& n, std::complex<double> xi) {
  std::complex<double> out = 1.0;
  for (const auto& pp : factor(n).factors) {
    const std::complex<double> base =
        std::exp(xi * std::log(static_cast<double>(pp.prime.norm())));
    std::complex<double> term = 1.0, acc = 1.0;
    for (int k = 1; k <= pp.exponent; ++k) {
      term *= base;
      acc += term;
    }
    out *= acc;
  }
  return out;
}

std::vector<CanonicalIdealRep> ideal_divisors(const Factorization& f) {
  std::vector<GaussianInt> divs{{1, 0}};
  for (const auto& pp : f.factors) {
    const std::size_t base = divs.size();
    GaussianInt power{1, 0};
    for (int k = 1; k <= pp.exponent; ++k) {
      power = power * pp.prime.value();
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::vector<CanonicalIdealRep> out;
  out.reserve(divs.size());
  for (const auto& d : divs) out.push_back(canonical_rep(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalIdealRep> ideal_divisors(const CanonicalIdealRep& n) {
  return ideal_divisors(factor(n));
}

std::vector<CanonicalIdealRep> ideals_up_to(std::int64_t max_norm) {
  std::vector<CanonicalIdealRep> out;
  for (std::int64_t a = 1; a * a <= max_norm; ++a)
    for (std::int64_t b = 0; a * a + b * b <= max_norm; ++b) out.push_back(canonical_rep({a, b}));
  std::sort(out.begin(), out.end());
  return out;
}

// --- residue rings -----------------------------------------------------------

ResidueRing::ResidueRing(GaussianInt modulus) : modulus_(modulus) {
  if (modulus.is_zero()) throw DomainError("residue ring modulo zero");
  size_ = modulus.norm();
  const std::int64_t a = modulus.re, b = modulus.im;
  // Imaginary parts of (u + vi)(a + bi) = u b + v a generate g Z.
  std::int64_t x0 = 1, x1 = 0, r0 = b, r1 = a;  // x*b + y*a = r
  std::int64_t y0 = 0, y1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (r0 < 0) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  g_ = r0;
  period_ = size_ / g_;
  const GaussianInt lattice_vec = GaussianInt{x0, y0} * modulus;  // im == g
  shift_re_ = ((lattice_vec.re % period_) + period_) % period_;
}

GaussianInt ResidueRing::reduce(GaussianInt x) const {
  const std::int64_t k = floor_div(x.im, g_);
  const i128 re = i128{x.re} - i128{k} * shift_re_;
  const std::int64_t im = x.im - k * g_;
  i128 r = re % period_;
  if (r < 0) r += period_;
  return {static_cast<std::int64_t>(r), im};
}

std::int64_t ResidueRing::index(GaussianInt x) const {
  const GaussianInt r = reduce(x);
  return r.re * g_ + r.im;
}

GaussianInt ResidueRing::element(std::int64_t idx) const { return {idx / g_, idx % g_}; }

bool ResidueRing::is_zero(GaussianInt x) const {
  const GaussianInt r = reduce(x);
  return r.re == 0 && r.im == 0;
}

GaussianInt ResidueRing::mul(GaussianInt a, GaussianInt b) const {
  const GaussianInt ra = reduce(a), rb = reduce(b);
  const i128 re = i128{ra.re} * rb.re - i128{ra.im} * rb.im;
  const i128 im = i128{ra.re} * rb.im + i128{ra.im} * rb.re;
  // Reduce the 128-bit product along the same lattice basis.
  i128 k = floor_div128(im, g_);
  i128 rre = re - k * shift_re_;
  const std::int64_t rim = static_cast<std::int64_t>(im - k * g_);
  rre %= period_;
  if (rre < 0) rre += period_;
  return {static_cast<std::int64_t>(rre), rim};
}

GaussianInt ResidueRing::pow(GaussianInt a, std::uint64_t e) const {
  GaussianInt r = reduce({1, 0});
  GaussianInt base = reduce(a);
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace pgt
