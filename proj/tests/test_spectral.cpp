#include <doctest.h>

#include <cmath>
#include <fstream>

#include "pgt/gaussian.hpp"
#include "pgt/spectral.hpp"

using namespace pgt;

namespace {

EigenvalueTable sample_table() {
  std::string text = "# source: synthetic test data\n";
  for (int j = 1; j <= 400; ++j) text += std::to_string(std::sqrt(12.0 * j) + 0.01 * j) + "\n";
  return parse_eigenvalues(text, "synthetic");
}

}  // namespace

TEST_CASE("parsing eigenvalue files") {
  const auto empty = parse_eigenvalues("");
  CHECK(empty.r_values.empty());
  CHECK(empty.count_up_to(100) == 0);

  const auto t = parse_eigenvalues("# source: test\n# comment\n1.5\n\n2.25\n3\n");
  CHECK(t.source == "test");
  CHECK(t.r_values == std::vector<double>{1.5, 2.25, 3.0});
  CHECK(t.count_up_to(2.25) == 2);
  CHECK(t.checksum == fnv1a64("# source: test\n# comment\n1.5\n\n2.25\n3\n"));

  try {
    parse_eigenvalues("1.0\n3.0\n2.0\n", "r.txt");
    FAIL("unsorted input accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("r.txt:3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_eigenvalues("1.0\nabc\n"), DomainError);
  CHECK_THROWS_AS(parse_eigenvalues("1.0x\n"), DomainError);
  CHECK_THROWS_AS(parse_eigenvalues("-1.0\n"), DomainError);
  CHECK_THROWS_AS(load_eigenvalues("/nonexistent/file.txt"), DomainError);
}

TEST_CASE("loading from disk") {
  const std::string path = "spectral_test_values.txt";
  {
    std::ofstream out(path);
    out << "# source: disk\n2.0\n4.0\n";
  }
  const auto t = load_eigenvalues(path);
  CHECK(t.source == "disk");
  CHECK(t.r_values.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("FNV-1a") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("exponential sum") {
  const auto t = sample_table();
  CHECK(spectral_sum(t, 30, 1.0).real() == doctest::Approx(static_cast<double>(t.count_up_to(30))));
  CHECK(std::abs(spectral_sum(t, 0, 1e3)) == 0);
  const double X = 777;
  const auto whole = spectral_sum(t, 60, X);
  std::complex<double> manual = 0;
  for (double r : t.r_values)
    if (r <= 60) manual += std::polar(1.0, r * std::log(X));
  CHECK(std::abs(whole - manual) < 1e-9);
  // Additivity over a split of the range.
  const auto lower = spectral_sum(t, 30, X);
  std::complex<double> upper = 0;
  for (double r : t.r_values)
    if (r > 30 && r <= 60) upper += std::polar(1.0, r * std::log(X));
  CHECK(std::abs(whole - lower - upper) < 1e-9);
  CHECK_THROWS_AS(spectral_sum(t, -1, X), DomainError);
  CHECK_THROWS_AS(spectral_sum(t, 10, 0.5), DomainError);

  const auto rows = stx_bound_report(t, {10, 40}, {1e2, 1e3});
  CHECK(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.ratio == doctest::Approx(r.magnitude / (r.T * r.T * std::pow(r.X, 0.25))));
}

TEST_CASE("explicit formula pieces") {
  const auto t = sample_table();
  const double X = 1e4, T = 50;
  const double terms = spectral_terms(t, X, T);
  double manual = 0;
  for (double r : t.r_values)
    if (r <= T) manual += 2 * (std::pow(std::complex<double>(X), std::complex<double>(1, r)) / std::complex<double>(1, r)).real();
  CHECK(terms == doctest::Approx(manual).epsilon(1e-9));
  const auto rep = explicit_formula_residual(t, X, T, X * X / 2 + terms);
  CHECK(rep.residual < 1e-6 * X * X);
  CHECK(rep.band == doctest::Approx(X * X * std::log(X) / T));
  CHECK(rep.regime_ok);
  CHECK_FALSE(explicit_formula_residual(t, 100, 50, 0).regime_ok);
}

TEST_CASE("smoothed spectral terms decay") {
  const double X = 1e3;
  const KernelSpec k(50);
  for (double r : {5.0, 20.0, 80.0, 300.0}) {
    const auto v = smoothed_spectral_term(r, X, k);
    // One integration by parts: |term| <= (X+2Y)^2 / (|1+ir||2+ir|) * integral |k'|.
    const double bound = std::pow(X + 100, 2) / (std::abs(std::complex<double>(1, r)) * std::abs(std::complex<double>(2, r))) *
                         k.derivative_l1();
    CHECK(std::abs(v) <= bound * (1 + 1e-9));
  }
  CHECK(std::abs(smoothed_spectral_term(300, X, k)) < std::abs(smoothed_spectral_term(5, X, k)));
  const auto t = sample_table();
  const auto s = smoothed_spectral_side(t, X, 60, k);
  CHECK(s.main == doctest::Approx(0.5 * (X * X + 2 * X * k.moment(1) + k.moment(2))).epsilon(1e-9));
}

TEST_CASE("Weyl fit") {
  const auto t = sample_table();
  const auto f = weyl_fit(t);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(0.1));
  CHECK_THROWS_AS(weyl_fit(parse_eigenvalues("1\n2\n3\n")), DomainError);
}
