// parallel.hpp
//
// Execution policy shared by the OpenMP kernels and their serial references,
// plus the reductions that keep floating-point results bit-identical across
// thread counts: per-item values are written to a buffer in index order and
// then reduced pairwise in a fixed tree.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pgt {

enum class Execution { serial, parallel };

/// Thread count used by parallel kernels. Defaults to PGT_THREADS when set,
/// otherwise the OpenMP default.
int thread_count();
void set_thread_count(int n);

/// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <class T>
class CompensatedSum<std::complex<T>> {
 public:
  void add(std::complex<T> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  [[nodiscard]] std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<T> re_, im_;
};

/// Fixed-shape pairwise reduction: blocks of 64 summed with compensation,
/// then combined as a balanced binary tree. Independent of thread count.
template <class T>
T pairwise_sum(std::span<const T> xs) {
  constexpr std::size_t kLeaf = 64;
  if (xs.size() <= kLeaf) {
    CompensatedSum<T> acc;
    for (const T& x : xs) acc.add(x);
    return acc.value();
  }
  const std::size_t half = ((xs.size() / kLeaf + 1) / 2) * kLeaf;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& xs) {
  return pairwise_sum(std::span<const T>(xs));
}

}  // namespace pgt
