#include <doctest.h>

#include <vector>

#include "pgt/parallel.hpp"

using namespace pgt;

TEST_CASE("compensated and pairwise sums") {
  std::vector<double> xs(100000, 0.1);
  xs.push_back(1e16);
  xs.push_back(-1e16);
  CompensatedSum<double> c;
  for (double x : xs) c.add(x);
  CHECK(c.value() == doctest::Approx(10000.0).epsilon(1e-9));
  std::vector<double> ys(1 << 16, 0.1);
  CHECK(pairwise_sum(ys) == doctest::Approx(6553.6).epsilon(1e-13));
}

TEST_CASE("thread count") {
  const int before = thread_count();
  set_thread_count(1);
  CHECK(thread_count() == 1);
  set_thread_count(before);
  CHECK(thread_count() == before);
}
