#include "pgt/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace pgt {

namespace {

int initial_thread_count() {
  if (const char* env = std::getenv("PGT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

int& configured() {
  static int n = initial_thread_count();
  return n;
}

}  // namespace

int thread_count() { return configured(); }

void set_thread_count(int n) { configured() = n > 0 ? n : initial_thread_count(); }

}  // namespace pgt
