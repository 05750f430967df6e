// ideal_table.hpp
//
// Norm-ordered table of all nonzero ideals of Z[i] up to a cutoff, with each
// ideal split as (prime power) x (smaller cofactor). This turns any
// multiplicative function into one pass over the table once its prime-power
// values are known, which is how every Dirichlet series in the library is
// evaluated.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pgt/gaussian.hpp"

namespace pgt {

enum class PrimeKind : std::uint8_t { ramified, inert, split };

struct PrimeIdeal {
  GaussianInt rep;          // canonical generator
  std::int64_t norm = 0;    // 2, p^2 or p
  std::uint64_t p = 0;      // rational prime below
  PrimeKind kind = PrimeKind::split;
  std::uint64_t root = 0;   // split primes: r with i = r mod rep, so a+bi -> a+b r mod p
  int max_exponent = 0;     // largest k with norm^k <= cutoff
  std::int32_t power_offset = 0;  // into flattened (prime, k) arrays, k = 1..max_exponent
};

class IdealTable {
 public:
  struct Entry {
    std::int32_t re = 1, im = 0;  // canonical generator
    std::int32_t prime = -1;      // smallest prime ideal factor; -1 for (1)
    std::int32_t exponent = 0;
    std::int32_t rest = -1;       // index of rep / prime^exponent

    [[nodiscard]] GaussianInt rep() const { return {re, im}; }
    [[nodiscard]] std::int64_t norm() const {
      return std::int64_t{re} * re + std::int64_t{im} * im;
    }
  };

  explicit IdealTable(std::int64_t cutoff);

  /// Shared immutable table for at least `cutoff` (rounded up to a power of 2).
  static std::shared_ptr<const IdealTable> shared(std::int64_t cutoff);

  [[nodiscard]] std::int64_t cutoff() const { return cutoff_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const Entry& operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::span<const Entry> entries() const { return entries_; }
  [[nodiscard]] std::span<const PrimeIdeal> primes() const { return primes_; }
  [[nodiscard]] std::size_t prime_power_slots() const { return power_slots_; }

  /// Number of leading entries with norm <= max_norm.
  [[nodiscard]] std::size_t count_up_to(std::int64_t max_norm) const;
  /// Index of a canonical ideal, or -1 when beyond the cutoff.
  [[nodiscard]] std::int64_t index_of(const CanonicalIdealRep& q) const;

  /// Evaluates a multiplicative function on the first `count` entries given
  /// its values at prime powers, laid out as pp[prime.power_offset + k - 1].
  template <class T>
  void expand_multiplicative(std::span<const T> pp, std::span<T> out) const {
    out[0] = T(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
      const Entry& e = entries_[i];
      out[i] = pp[primes_[e.prime].power_offset + e.exponent - 1] * out[e.rest];
    }
  }

 private:
  std::int64_t cutoff_;
  std::int64_t side_;
  std::vector<Entry> entries_;
  std::vector<PrimeIdeal> primes_;
  std::vector<std::int32_t> lookup_;  // (re-1)*side + im -> index
  std::size_t power_slots_ = 0;
};

}  // namespace pgt
