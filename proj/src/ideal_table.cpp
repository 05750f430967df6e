#include "pgt/ideal_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace pgt {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

IdealTable::IdealTable(std::int64_t cutoff) : cutoff_(cutoff) {
  if (cutoff < 1) throw DomainError("IdealTable cutoff must be >= 1");
  if (cutoff > (std::int64_t{1} << 28)) throw LimitError("IdealTable cutoff too large");
  side_ = isqrt(cutoff) + 1;

  for (std::int64_t a = 1; a < side_; ++a)
    for (std::int64_t b = 0; a * a + b * b <= cutoff; ++b)
      entries_.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
  std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
    const auto nx = x.norm(), ny = y.norm();
    return nx != ny ? nx < ny : x.re < y.re;
  });

  lookup_.assign(static_cast<std::size_t>(side_ * side_), -1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& r = entries_[i];
    lookup_[static_cast<std::size_t>((r.re - 1) * side_ + r.im)] = static_cast<std::int32_t>(i);
  }

  // Smallest prime factor sieve on rational integers up to the cutoff.
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(cutoff) + 1, 0);
  for (std::int64_t i = 2; i <= cutoff; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= cutoff; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }

  // Prime ideals are the entries of prime norm, or p^2 with p = 3 mod 4.
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const auto n = e.norm();
    const GaussianInt rep = e.rep();
    PrimeIdeal pi;
    if (spf[n] == static_cast<std::uint32_t>(n)) {
      pi.p = static_cast<std::uint64_t>(n);
      pi.kind = (n == 2) ? PrimeKind::ramified : PrimeKind::split;
    } else if (e.im == 0 && spf[e.re] == static_cast<std::uint32_t>(e.re) && e.re % 4 == 3) {
      pi.p = static_cast<std::uint64_t>(e.re);
      pi.kind = PrimeKind::inert;
    } else {
      continue;
    }
    pi.rep = rep;
    pi.norm = n;
    if (pi.kind == PrimeKind::split) {
      // a + b r = 0 mod p  =>  r = -a / b.
      const auto p = pi.p;
      const auto binv = powmod_u64(static_cast<std::uint64_t>(e.im) % p, p - 2, p);
      pi.root = (p - mulmod_u64(static_cast<std::uint64_t>(e.re) % p, binv, p)) % p;
    }
    std::int64_t power = n;
    while (power <= cutoff) {
      ++pi.max_exponent;
      if (power > cutoff / n) break;
      power *= n;
    }
    pi.power_offset = static_cast<std::int32_t>(power_slots_);
    power_slots_ += static_cast<std::size_t>(pi.max_exponent);
    primes_.push_back(pi);
  }

  // Split primes keyed by p give both conjugates; pick whichever divides.
  std::map<std::uint64_t, std::vector<std::int32_t>> primes_over;
  for (std::size_t k = 0; k < primes_.size(); ++k) primes_over[primes_[k].p].push_back(static_cast<std::int32_t>(k));

  entries_[0].prime = -1;
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    const std::uint64_t p = spf[e.norm()];
    std::int32_t which = -1;
    for (auto k : primes_over.at(p)) {
      if (divides(primes_[k].rep, e.rep())) {
        which = k;
        break;
      }
    }
    if (which < 0) throw DomainError("IdealTable: no prime factor found");
    GaussianInt rest = e.rep();
    int k = 0;
    while (divides(primes_[which].rep, rest)) {
      rest = exact_div(rest, primes_[which].rep);
      ++k;
    }
    e.prime = which;
    e.exponent = k;
    e.rest = static_cast<std::int32_t>(index_of(canonical_rep(rest)));
  }
}

std::size_t IdealTable::count_up_to(std::int64_t max_norm) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), max_norm,
                             [](std::int64_t v, const Entry& e) { return v < e.norm(); });
  return static_cast<std::size_t>(it - entries_.begin());
}

std::int64_t IdealTable::index_of(const CanonicalIdealRep& q) const {
  const auto& r = q.value();
  if (r.re >= side_ || r.im >= side_ || q.norm() > cutoff_) return -1;
  return lookup_[static_cast<std::size_t>((r.re - 1) * side_ + r.im)];
}

std::shared_ptr<const IdealTable> IdealTable::shared(std::int64_t cutoff) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const IdealTable>> cache;
  std::int64_t size = 1024;
  while (size < cutoff) size *= 2;
  std::lock_guard lock(mu);
  auto it = cache.lower_bound(size);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const IdealTable>(size);
  cache[size] = table;
  return table;
}

}  // namespace pgt
