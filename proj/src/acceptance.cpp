#include "pgt/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "pgt/characters.hpp"
#include "pgt/exponents.hpp"
#include "pgt/fit.hpp"
#include "pgt/geodesics.hpp"
#include "pgt/kernel.hpp"
#include "pgt/lattice.hpp"
#include "pgt/lfunctions.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quad_counts.hpp"
#include "pgt/spectral.hpp"
#include "pgt/sweep_constants.hpp"

namespace pgt {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<GaussianInt> elements_up_to(std::int64_t max_norm) {
  std::vector<GaussianInt> out;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_norm)));
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      if (a * a + b * b <= max_norm) out.push_back({a, b});
  return out;
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  std::string failures;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    failures += failures.empty() ? what : "; " + what;
  }
  [[nodiscard]] std::string text() const {
    return failures.empty() ? detail.str() : detail.str() + " [failed: " + failures + "]";
  }
};

double geodesic_reach(const AcceptanceOptions& o) {
  const double X = o.quick ? 3e3 : 1e4;
  return X + std::pow(X, 0.7) + 1;
}

CriterionResult c1(const AcceptanceOptions&) {
  Check c;
  const auto t0 = Clock::now();
  const auto u = uncond_system();
  c.require(std::abs(u.sigma - 0.93812) <= 1e-4, "sigma");
  c.require(std::abs(u.nu - 0.649773) <= 1e-5, "nu");
  c.require(std::abs(u.pointwise_exponent - 1.60023) <= 1e-5, "pointwise exponent");
  c.require(std::abs(u.nu - u.nu_closed) <= 1e-10 && std::abs(u.sigma - u.sigma_closed) <= 1e-10 &&
                u.closed_residual <= 1e-10,
            "closed forms");
  c.require(corollary_exponents(Rational(1, 6)).subconvex == Rational(67, 42), "67/42");
  c.require(corollary_exponents(Rational(0)).mean_lindelof == Rational(34, 23), "34/23");
  c.require(corollary_exponents(Rational(1, 4)).trivial == Rational(5, 3), "5/3");
  c.require(corollary_exponents(Rational(3, 16)).trivial == Rational(13, 8), "13/8");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 1.0, "runtime under 1 s");
  c.detail << "sigma=" << fmt("%.6f", u.sigma) << " nu=" << fmt("%.7f", u.nu)
           << " pointwise=" << fmt("%.6f", u.pointwise_exponent) << " 67/42 34/23 5/3 13/8 exact";
  return {1, "exponent reproduction", c.ok, false, 0, c.text()};
}

CriterionResult c2(const AcceptanceOptions& o) {
  Check c;
  const std::int64_t qmax = o.quick ? 50 : 200, nmax = o.quick ? 10 : 40, phimax = o.quick ? 100 : 300;
  const auto qs = ideals_up_to(qmax);
  const auto ns = elements_up_to(nmax);
  std::int64_t mismatches = 0, pairs = 0;
  for (const auto& q : qs)
    for (const auto& n : ns) {
      ++pairs;
      if (rho_fast(q, n) != rho_bruteforce(q, n * n - GaussianInt{4, 0})) ++mismatches;
    }
  std::int64_t phi_bad = 0, phi_checked = 0;
  for (const auto& q : ideals_up_to(phimax)) {
    ++phi_checked;
    if (rho_residue_sum(q) != euler_phi(q)) ++phi_bad;
  }
  c.require(mismatches == 0, "rho_fast = rho_bruteforce");
  c.require(phi_bad == 0, "sum of rho = phi");
  c.detail << pairs << " (q, n) pairs, " << mismatches << " mismatches; " << phi_checked << " ideals, "
           << phi_bad << " phi failures";
  return {2, "rho/lambda exactness", c.ok, false, 0, c.text()};
}

CriterionResult c3(const AcceptanceOptions& o) {
  Check c;
  const std::int64_t qmax = o.quick ? 30 : 100, kmax = o.quick ? 9 : 25, smax = o.quick ? 100 : 500;
  double worst = 0;
  const auto ks = elements_up_to(kmax);
  for (const auto& q : ideals_up_to(qmax))
    for (const auto& k : ks) worst = std::max(worst, kloosterman_identity_check(q, k));
  c.require(worst <= 1e-8, "identity within 1e-8");
  std::int64_t bad = 0;
  std::vector<GaussianInt> ms{{0, 0}};
  for (const auto& q : ideals_up_to(5)) ms.push_back(q.value());
  const auto ns = elements_up_to(5);
  double ratio = 0;
  for (const auto& q : ideals_up_to(smax)) {
    const auto s = kloosterman({0, 0}, {0, 0}, q).value;
    if (s.real() != static_cast<double>(euler_phi(q)) || s.imag() != 0.0) ++bad;
    for (const auto& m : ms)
      for (const auto& n : ns) ratio = std::max(ratio, weil_ratio(kloosterman(m, n, q)));
  }
  c.require(bad == 0, "S(0,0,q) = phi(q)");
  c.require(ratio <= sweep::kWeilConstant, "Weil ratio <= C_w");
  c.detail << "identity max dev " << fmt("%.2e", worst) << "; S(0,0,q)=phi failures " << bad
           << "; max Weil ratio " << fmt("%.4f", ratio) << " <= C_w " << sweep::kWeilConstant;
  return {3, "Kloosterman identities", c.ok, false, 0, c.text()};
}

CriterionResult c4(const AcceptanceOptions& o) {
  Check c;
  const std::int64_t Q = o.quick ? 500 : 2000;
  const GaussianInt ns[] = {{3, 0}, {4, 0}, {5, 0}, {1, 2}, {3, 2}, {2, 3}};
  std::int64_t worst = 0, checked = 0;
  for (const auto& n : ns) {
    const auto r = szmidt_coefficient_check(n * n - GaussianInt{4, 0}, Q);
    worst = std::max(worst, r.max_deviation);
    checked += r.ideals_checked;
  }
  c.require(worst == 0, "zero deviation");
  c.detail << checked << " coefficients up to N(q) = " << Q << ", max deviation " << worst;
  return {4, "factorization of the lambda series", c.ok, false, 0, c.text()};
}

CriterionResult c5(const AcceptanceOptions& o) {
  Check c;
  const std::vector<std::int64_t> Zs = o.quick ? std::vector<std::int64_t>{1000, 10000}
                                               : std::vector<std::int64_t>{1000, 10000, 100000};
  const GaussianInt qs[] = {{1, 0}, {1, 1}, {3, 0}, {2, 1}};
  for (const auto& g : qs) {
    const auto q = canonical_rep(g);
    const auto profile = lambda_partial_sum_profile(q, Zs.back());
    const double avg = lambda_average(q);
    std::vector<std::pair<double, double>> samples;
    for (auto Z : Zs)
      samples.emplace_back(static_cast<double>(Z), std::max(1.0, sup_remainder(profile, avg, Z / 2, Z)));
    const double slope = fit_exponent(samples).slope;
    const double limit = q.norm() == 1 ? 0.36 : 0.5;
    c.require(slope <= limit, "exponent for q = " + to_string(q.value()));
    c.detail << "q=" << to_string(q.value()) << ": " << fmt("%.3f", slope) << "; ";
  }
  return {5, "average of lambda_q", c.ok, false, 0, c.text()};
}

CriterionResult c6(const AcceptanceOptions&) {
  Check c;
  std::vector<std::pair<double, double>> samples;
  double prev = 1e300;
  for (double V : {1e2, 1e3, 1e4}) {
    const double dev = std::abs(normalization_sum(V) - 1.0);
    c.require(dev < prev, "decreasing at V = " + fmt("%g", V));
    prev = dev;
    samples.emplace_back(V, dev);
    c.detail << "V=" << fmt("%g", V) << ": " << fmt("%.3e", dev) << "; ";
  }
  c.require(prev <= 0.1, "<= 0.1 at V = 1e4");
  const double slope = fit_exponent(samples).slope;
  c.require(slope <= -0.4, "decay exponent <= -0.4");
  c.detail << "decay exponent " << fmt("%.4f", slope);
  return {6, "normalization", c.ok, false, 0, c.text()};
}

CriterionResult c7(const AcceptanceOptions& o) {
  Check c;
  const auto g = GeodesicSum::shared(geodesic_reach(o));
  const std::vector<double> grid = o.quick ? std::vector<double>{1e3, 3e3} : std::vector<double>{1e3, 3e3, 1e4};
  double prev = 1e300, last = 0;
  for (double X : grid) {
    const auto r = g->psi(X);
    const double ratio = r.psi / r.main;
    const double dev = std::abs(ratio - 1.0);
    c.require(dev < prev, "improving at X = " + fmt("%g", X));
    prev = dev;
    last = ratio;
    c.detail << "X=" << fmt("%g", X) << ": ratio " << fmt("%.5f", ratio) << "; ";
  }
  c.require(std::abs(last - 1.0) <= 0.1, "within 10% at the largest X");
  const double C = fitted_geodesic_constant(*g, grid);
  c.require(std::abs(C / kGeodesicConstant - 1.0) <= 0.05, "fitted constant within 5% of 1/pi");
  c.detail << "fitted C=" << fmt("%.5f", C) << " (1/pi=" << fmt("%.5f", kGeodesicConstant)
           << ", 4/pi=" << fmt("%.5f", 4.0 / std::numbers::pi) << ")";
  return {7, "geodesic count trend", c.ok, false, 0, c.text()};
}

CriterionResult c8(const AcceptanceOptions& o) {
  Check c;
  const auto g = GeodesicSum::shared(geodesic_reach(o));
  const std::vector<double> grid = o.quick ? std::vector<double>{1e3, 3e3} : std::vector<double>{1e3, 3e3, 1e4};
  double prev = 1e300;
  bool additive = true;
  double triv = 0;
  for (double X : grid) {
    const double Y = std::pow(X, 0.7);
    const auto s = g->interval(X, Y);
    const double e = std::abs(s.normalized_error);
    c.require(e < prev, "normalized error decreasing at X = " + fmt("%g", X));
    prev = e;
    c.detail << "X=" << fmt("%g", X) << ": " << fmt("%.5f", s.normalized_error) << "; ";
    for (double split : {0.1, 0.37, 0.5, 0.9}) {
      const double Y1 = std::floor(split * Y) + 0.5;
      if (g->interval_fixed(X, Y1) + g->interval_fixed(X + Y1, Y - Y1) != g->interval_fixed(X, Y)) additive = false;
    }
    for (double nu : {0.0, 0.25, 0.5, 0.7, 1.0}) {
      const double Yt = std::pow(X, nu);
      if (X + Yt > g->X_max()) continue;
      triv = std::max(triv, g->interval(X, Yt).difference / (X * Yt));
    }
  }
  c.require(additive, "interval additivity");
  c.require(triv <= sweep::kTrivialBoundConstant, "difference <= C X Y");
  c.detail << "additivity exact; max difference/(XY) " << fmt("%.3f", triv) << " <= " << sweep::kTrivialBoundConstant;
  return {8, "short intervals", c.ok, false, 0, c.text()};
}

CriterionResult c9(const AcceptanceOptions& o) {
  Check c;
  c.require(circle_count({0, 0}, 1).count == 5, "count 5 at M = 1");
  c.require(circle_count({0, 0}, 2).count == 9, "count 9 at M = 2");
  const auto fit = eta_fit(log_grid(1e3, o.quick ? 1e5 : 1e6, o.quick ? 9 : 13), 100, 7);
  c.require(fit.fitted_exponent < 0.36, "fitted exponent < 0.36");
  c.detail << "counts 5 and 9 exact; eta fit " << fmt("%.4f", fit.fitted_exponent) << " (r^2 "
           << fmt("%.3f", fit.fit.r_squared) << ")";
  return {9, "circle counts", c.ok, false, 0, c.text()};
}

CriterionResult c10(const AcceptanceOptions& o) {
  Check c;
  const double X = 1e3;
  const KernelSpec k(std::pow(X, 0.7));
  const double mass = k.mass();
  c.require(std::abs(mass - 1.0) <= 1e-8, "mass 1");
  const double dl1 = k.derivative_l1() * k.Y();
  c.require(std::abs(dl1 - 4.0 / (std::numbers::e * KernelSpec::normalizer())) <= 1e-6, "integral of |k'| = 2 max k");
  const auto g = GeodesicSum::shared(geodesic_reach(o));
  const double sm = g->smoothed(X, k);
  const double lo = g->psi(X).psi, hi = g->psi(X + 2 * k.Y()).psi;
  c.require(lo <= sm && sm <= hi, "sandwich");
  const double quad = psi_smoothed_quadrature(*g, X, k, 64);
  const double rel = std::abs(sm - quad) / sm;
  c.require(rel <= 1e-3, "quadrature agreement");
  c.detail << "mass-1 " << fmt("%.1e", mass - 1.0) << "; Y*int|k'| " << fmt("%.4f", dl1) << "; "
           << fmt("%.1f", lo) << " <= " << fmt("%.1f", sm) << " <= " << fmt("%.1f", hi) << "; quadrature rel "
           << fmt("%.2e", rel);
  return {10, "smoothing", c.ok, false, 0, c.text()};
}

CriterionResult c11(const AcceptanceOptions& o) {
  if (!o.eigenvalue_file) return {11, "spectral", true, true, 0, "no eigenvalue file supplied"};
  Check c;
  const auto table = load_eigenvalues(*o.eigenvalue_file);
  const double T = table.r_values.empty() ? 0 : table.r_values.back();
  const auto s = spectral_sum(table, T, 1.0);
  c.require(s.real() == static_cast<double>(table.count_up_to(T)) && s.imag() == 0.0, "S(T,1) = count");
  c.detail << table.r_values.size() << " eigenvalues from " << table.source << "; ";
  if (!table.r_values.empty()) {
    const double X = o.quick ? 3e3 : 1e4;
    const double Tx = std::min(std::sqrt(X), T);
    const auto g = GeodesicSum::shared(geodesic_reach(o));
    const auto r = explicit_formula_residual(table, X, Tx, g->psi(X).psi);
    c.detail << "residual/(X^2 log X/T) at X=" << fmt("%g", X) << ": " << fmt("%.4f", r.residual / r.band) << "; ";
    if (T >= 10 * table.r_values.front()) {
      const double slope = weyl_fit(table).slope;
      c.require(std::abs(slope - 3.0) <= 0.5, "Weyl exponent near 3");
      c.detail << "Weyl exponent " << fmt("%.3f", slope);
    } else {
      c.detail << "Weyl fit skipped (less than a decade)";
    }
  }
  return {11, "spectral", c.ok, false, 0, c.text()};
}

}  // namespace

const std::map<int, std::string>& known_deviations() {
  static const std::map<int, std::string> m{
      {7, "|psi/(X^2/2) - 1| oscillates: 2.0e-3, 6.6e-4, 1.3e-3 at X = 1e3, 3e3, 1e4"},
      {12, "inherits the failure of criterion 7"},
  };
  return m;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  static const std::map<int, CriterionResult (*)(const AcceptanceOptions&)> table{
      {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7}, {8, c8}, {9, c9}, {10, c10}, {11, c11}};
  const auto it = table.find(id);
  if (it == table.end()) throw DomainError("run_criterion: no criterion " + std::to_string(id));
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = it->second(opts);
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, false, 0, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  double total = 0;
  bool all = true;
  for (int id = 1; id <= 11; ++id) {
    out.push_back(run_criterion(id, opts));
    if (id <= 10) {
      total += out.back().seconds;
      all = all && out.back().passed;
    }
    if (on_result) on_result(out.back());
  }
  CriterionResult r12{12, "end-to-end run", all && total <= 3600.0, false, total, ""};
  std::ostringstream d;
  d << "criteria 1-10 " << (all ? "all passed" : "not all passed") << " in " << fmt("%.1f", total) << " s on "
    << thread_count() << " thread(s)";
  r12.detail = d.str();
  out.push_back(r12);
  if (on_result) on_result(r12);
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  const char* tag = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
  s << "criterion " << r.id << " [" << tag << "] " << r.name << ": " << r.detail << " (" << fmt("%.1f", r.seconds)
    << " s)";
  if (!r.passed && !r.skipped && known_deviations().count(r.id))
    s << " -- known deviation: " << known_deviations().at(r.id);
  return s.str();
}

}  // namespace pgt
