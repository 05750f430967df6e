#include "pgt/lfunctions.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include <boost/math/special_functions/expint.hpp>

#include "pgt/ideal_table.hpp"

namespace pgt {

namespace {

std::int64_t smoothing_cutoff(double V) {
  if (!(V > 0)) throw DomainError("smoothing scale V must be positive");
  const double c = std::floor(40.0 * V);
  if (c > 1e9) throw LimitError("smoothing cutoff 40V too large");
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(c));
}

int ipow_sign(int c, int k) {
  if (k == 0) return 1;
  if (c == 0) return 0;
  return (c < 0 && k % 2 == 1) ? -1 : 1;
}

// Local factor of the coefficient of T_l L at pi^k, with a = v_pi(l).
std::int64_t szmidt_local(int c, std::int64_t norm, int a, int k) {
  std::int64_t out = 0;
  for (int j = 0; j <= k; ++j) {
    std::int64_t t = 0;
    for (int d = 0; d <= 1 && d <= a && d <= j; ++d) {
      if ((j - d) % 2 != 0) continue;
      const int e = (j - d) / 2;
      if (e > a - d) continue;
      std::int64_t term = d ? -c : 1;
      for (int r = 0; r < e; ++r) term *= norm;
      t += term;
    }
    out += t * ipow_sign(c, k - j);
  }
  return out;
}

// lambda_{pi^k}(n^2 - 4) for every prime power in the table up to max_norm.
std::vector<std::int64_t> lambda_prime_powers(const IdealTable& table, std::size_t prime_count,
                                              std::int64_t max_norm, GaussianInt n, Execution exec) {
  const GaussianInt delta = n * n - GaussianInt{4, 0};
  const auto primes = table.primes();
  std::vector<std::int64_t> pp(table.prime_power_slots(), 0);
  auto fill = [&](std::size_t k) {
    const PrimeIdeal& pi = primes[k];
    int kmax = 0;
    for (std::int64_t p = 1; p <= max_norm / pi.norm; p *= pi.norm) ++kmax;
    kmax = std::min(kmax, pi.max_exponent);
    if (pi.kind == PrimeKind::ramified || divides(pi.rep, delta)) {
      const auto rep = canonical_rep(pi.rep);
      for (int j = 1; j <= kmax; ++j) pp[pi.power_offset + j - 1] = lambda_prime_power(rep, j, n);
    } else {
      const int c = residue_symbol(delta, pi);
      for (int j = 1; j <= kmax; ++j) pp[pi.power_offset + j - 1] = (j % 2 == 0) ? 1 : c;
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 256) num_threads(thread_count())
    for (std::size_t k = 0; k < prime_count; ++k) fill(k);
  } else {
    for (std::size_t k = 0; k < prime_count; ++k) fill(k);
  }
  return pp;
}

std::size_t primes_up_to(const IdealTable& table, std::int64_t max_norm) {
  const auto primes = table.primes();
  std::size_t count = 0;
  while (count < primes.size() && primes[count].norm <= max_norm) ++count;
  return count;
}

// sum of chi(q) over the ideals of each norm m <= max_norm.
std::vector<std::int64_t> chi_per_norm(const QuadraticCharacter& chi, std::int64_t max_norm) {
  const auto table = IdealTable::shared(max_norm);
  const std::size_t count = table->count_up_to(max_norm);
  std::vector<std::int8_t> pp(table->prime_power_slots(), 0);
  for (const auto& pi : table->primes()) {
    if (pi.norm > max_norm) break;
    const int c = chi.at_prime(pi);
    for (int k = 1; k <= pi.max_exponent; ++k) pp[pi.power_offset + k - 1] = static_cast<std::int8_t>(ipow_sign(c, k));
  }
  std::vector<std::int8_t> values(count);
  table->expand_multiplicative<std::int8_t>(pp, values);
  std::vector<std::int64_t> per_norm(static_cast<std::size_t>(max_norm) + 1, 0);
  for (std::size_t i = 0; i < count; ++i) per_norm[static_cast<std::size_t>((*table)[i].norm())] += values[i];
  return per_norm;
}

const GaussianInt kOnePlusI{1, 1};

GaussianInt one_plus_i_power(int k) {
  GaussianInt out{1, 0};
  for (int j = 0; j < k; ++j) out = out * kOnePlusI;
  return out;
}

std::int64_t odd_conductor_norm(GaussianInt D) {
  std::int64_t out = 1;
  for (const auto& pp : factor(D).factors)
    if (pp.prime.norm() != 2 && pp.exponent % 2 == 1) out *= pp.prime.norm();
  return out;
}

bool odd_part_squarefree(GaussianInt D) {
  for (const auto& pp : factor(D).factors)
    if (pp.prime.norm() != 2 && pp.exponent > 1) return false;
  return true;
}

struct ClassEntry {
  bool known = false;
  int two_exponent = 0;
  bool ramified = false;
};

// Exponent of (1+i) in the conductor for each square class of Q_2(i)^*,
// keyed by (v mod 2) * 32 + index of D/(1+i)^v mod (1+i)^5.
const std::array<ClassEntry, 64>& two_exponent_table() {
  static const std::array<ClassEntry, 64> table = [] {
    std::array<ClassEntry, 64> t{};
    const GaussianInt m5 = one_plus_i_power(5);
    const ResidueRing ring(m5);
    for (int parity = 0; parity < 2; ++parity) {
      for (std::int64_t idx = 0; idx < ring.size(); ++idx) {
        const GaussianInt w0 = ring.element(idx);
        if (divides(kOnePlusI, w0)) continue;
        // Smallest representative of the class whose odd part is squarefree.
        GaussianInt best{0, 0};
        for (std::int64_t a = -3; a <= 3; ++a)
          for (std::int64_t b = -3; b <= 3; ++b) {
            const GaussianInt w = w0 + GaussianInt{a, b} * m5;
            if (w.is_zero() || !odd_part_squarefree(w)) continue;
            if (best.is_zero() || w.norm() < best.norm()) best = w;
          }
        const GaussianInt D = parity ? best * kOnePlusI : best;
        ClassEntry& e = t[static_cast<std::size_t>(parity * 32 + idx)];
        e.known = true;
        if (is_perfect_square(D)) continue;  // squares: trivial character
        const std::int64_t odd = odd_conductor_norm(D);
        struct Candidate {
          int ev, j;
        };
        const Candidate candidates[] = {{-1, 0}, {1, 0}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
        double best_disc = 1e300, second = 1e300;
        Candidate pick{};
        for (const auto& c : candidates) {
          const QuadraticCharacter chi(D, c.ev);
          const double disc = afe_discrepancy(chi, Conductor{odd, c.j});
          if (disc < best_disc) {
            second = best_disc;
            best_disc = disc;
            pick = c;
          } else {
            second = std::min(second, disc);
          }
        }
        if (!(best_disc < 1e-9 && second > 1e-6))
          throw DomainError("conductor: square class of " + to_string(D) + " not resolved");
        e.two_exponent = pick.j;
        e.ramified = pick.ev == 0;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

// --- zeta and L(s, chi) ------------------------------------------------------

double zeta_qi_tail_bound(double sigma, double X) {
  // #{ideals of norm <= t} <= (pi/4)(t + sqrt(2t) + 1/2); partial summation.
  const double pi = std::numbers::pi;
  return sigma * ((pi / 4) * std::pow(X, 1 - sigma) / (sigma - 1) +
                  (pi * std::sqrt(2.0) / 4) * std::pow(X, 0.5 - sigma) / (sigma - 0.5) +
                  (pi / 8) * std::pow(X, -sigma) / sigma);
}

SeriesValue zeta_qi(std::complex<double> s, std::int64_t cutoff) {
  if (s.real() < 1.2) throw DomainError("zeta_qi: Re(s) must be >= 1.2");
  if (cutoff < 1) throw DomainError("zeta_qi: cutoff must be >= 1");
  if (cutoff > 100'000'000) throw LimitError("zeta_qi: cutoff too large");
  std::vector<std::int64_t> per_norm(static_cast<std::size_t>(cutoff) + 1, 0);
  for (std::int64_t a = 1; a * a <= cutoff; ++a)
    for (std::int64_t b = 0; a * a + b * b <= cutoff; ++b) ++per_norm[static_cast<std::size_t>(a * a + b * b)];
  std::vector<std::complex<double>> terms;
  terms.reserve(per_norm.size());
  for (std::int64_t m = 1; m <= cutoff; ++m)
    if (per_norm[m]) terms.push_back(static_cast<double>(per_norm[m]) * std::exp(-s * std::log(static_cast<double>(m))));
  return {pairwise_sum(terms), zeta_qi_tail_bound(s.real(), static_cast<double>(cutoff)), 0, true};
}

std::complex<double> L_chi_smoothed(std::complex<double> s, const QuadraticCharacter& chi, double V) {
  const std::int64_t max_norm = smoothing_cutoff(V);
  const auto per_norm = chi_per_norm(chi, max_norm);
  std::vector<std::complex<double>> terms;
  terms.reserve(per_norm.size());
  for (std::int64_t m = 1; m <= max_norm; ++m) {
    if (per_norm[m] == 0) continue;
    const double x = static_cast<double>(m);
    terms.push_back(static_cast<double>(per_norm[m]) * std::exp(-x / V - s * std::log(x)));
  }
  return pairwise_sum(terms);
}

SeriesValue L_chi(std::complex<double> s, const QuadraticCharacter& chi, double V, double tol) {
  SeriesValue out;
  out.value = L_chi_smoothed(s, chi, V);
  out.V = V;
  out.converged = false;
  for (int doubling = 0; doubling < 3; ++doubling) {
    out.V *= 2;
    const auto next = L_chi_smoothed(s, chi, out.V);
    out.tail_bound = std::abs(next - out.value);
    out.value = next;
    if (out.tail_bound <= tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

// --- conductor and the approximate functional equation --------------------------

double Conductor::analytic() const {
  return 4.0 * static_cast<double>(odd_norm) * std::ldexp(1.0, two_exponent);
}

Conductor conductor(const QuadraticCharacter& chi) {
  const GaussianInt D = chi.D();
  if (is_perfect_square(D)) throw DomainError("conductor: trivial character");
  Conductor f;
  f.odd_norm = odd_conductor_norm(D);
  if (chi.even_value() != 0) return f;
  int v = 0;
  GaussianInt w = D;
  while (divides(kOnePlusI, w)) {
    w = exact_div(w, kOnePlusI);
    ++v;
  }
  const ResidueRing ring(one_plus_i_power(5));
  const auto& e = two_exponent_table()[static_cast<std::size_t>((v % 2) * 32 + ring.index(w))];
  if (!e.known || !e.ramified)
    throw DomainError("conductor: pinned value at (1+i) disagrees with the square class of " + to_string(D));
  f.two_exponent = e.two_exponent;
  return f;
}

double L1_afe(const QuadraticCharacter& chi, const Conductor& f, double c) {
  if (!(c > 0)) throw DomainError("L1_afe: split parameter must be positive");
  const double root_A = std::sqrt(f.analytic());
  const double scale = 2.0 * std::numbers::pi / root_A;
  const double reach = 37.0 * std::max(c, 1.0 / c);
  const auto max_norm = static_cast<std::int64_t>(std::ceil(reach / scale));
  if (max_norm > 50'000'000) throw LimitError("L1_afe: conductor too large");
  const auto per_norm = chi_per_norm(chi, max_norm);
  CompensatedSum<double> acc;
  for (std::int64_t m = 1; m <= max_norm; ++m) {
    if (per_norm[m] == 0) continue;
    const double x = scale * static_cast<double>(m);
    const double term = std::exp(-c * x) / static_cast<double>(m) + scale * boost::math::expint(1, x / c);
    acc.add(static_cast<double>(per_norm[m]) * term);
  }
  return acc.value();
}

double afe_discrepancy(const QuadraticCharacter& chi, const Conductor& f) {
  return std::abs(L1_afe(chi, f, 1.0) - L1_afe(chi, f, 1.3));
}

ZagierValue zagier_L1_exact(GaussianInt n) {
  ZagierValue out;
  out.n = n;
  out.split = discriminant_split(Discriminant::from_trace(n));
  const auto chi = QuadraticCharacter::from_split(out.split);
  out.f = conductor(chi);
  out.L = L1_afe(chi, out.f);
  out.T_l = T_l_poly(1.0, chi, out.split.l).real();
  out.value = out.T_l * out.L;
  return out;
}

// --- T_l and the coefficient identity ----------------------------------------

std::complex<double> T_l_poly(std::complex<double> s, const QuadraticCharacter& chi, const CanonicalIdealRep& l) {
  CompensatedSum<std::complex<double>> acc;
  for (const auto& d : ideal_divisors(l)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    int c = 1;
    for (const auto& pp : factor(d).factors) c *= chi.at_prime(pp.prime);
    if (c == 0) continue;
    const auto rest = canonical_rep(exact_div(l.value(), d.value()));
    const double nd = static_cast<double>(d.norm());
    acc.add(static_cast<double>(c * mu) * std::exp(-s * std::log(nd)) * sigma_xi(rest, 1.0 - 2.0 * s));
  }
  return acc.value();
}

std::int64_t szmidt_coefficient(const CanonicalIdealRep& q, const QuadraticCharacter& chi,
                                const CanonicalIdealRep& l) {
  std::map<CanonicalIdealRep, int> l_exp;
  for (const auto& pp : factor(l).factors) l_exp[pp.prime] = pp.exponent;
  std::int64_t out = 1;
  for (const auto& pp : factor(q).factors) {
    const auto it = l_exp.find(pp.prime);
    const int a = it == l_exp.end() ? 0 : it->second;
    out *= szmidt_local(chi.at_prime(pp.prime), pp.prime.norm(), a, pp.exponent);
    if (out == 0) return 0;
  }
  return out;
}

SzmidtReport szmidt_coefficient_check(GaussianInt delta, std::int64_t Qmax) {
  if (Qmax > 10'000) throw LimitError("szmidt_coefficient_check: Qmax > 10^4");
  SzmidtReport report;
  report.split = discriminant_split(delta);
  const auto character = QuadraticCharacter::from_split(report.split);

  // Brute-force rho for every ideal up to Qmax, then the Moebius convolution.
  const auto ideals = ideals_up_to(Qmax);
  std::vector<std::int64_t> rho_values(ideals.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
  for (std::size_t i = 0; i < ideals.size(); ++i) rho_values[i] = rho_bruteforce(ideals[i], delta);
  std::map<CanonicalIdealRep, std::int64_t> rho_of;
  for (std::size_t i = 0; i < ideals.size(); ++i) rho_of[ideals[i]] = rho_values[i];
  rho_of[CanonicalIdealRep{}] = rho_bruteforce(CanonicalIdealRep{}, delta);

  for (const auto& q : ideals) {
    const auto f = factor(q);
    std::int64_t lam = 0;
    auto recurse = [&](auto&& self, std::size_t i, int mu, GaussianInt q3) -> void {
      if (i == f.factors.size()) {
        lam += mu * rho_of.at(canonical_rep(q3));
        return;
      }
      const auto& pp = f.factors[i];
      for (int e1 = 0; 2 * e1 <= pp.exponent; ++e1)
        for (int e2 = 0; e2 <= 1 && 2 * e1 + e2 <= pp.exponent; ++e2) {
          GaussianInt next = q3;
          for (int t = 0; t < pp.exponent - 2 * e1 - e2; ++t) next = next * pp.prime.value();
          self(self, i + 1, e2 ? -mu : mu, next);
        }
    };
    recurse(recurse, 0, 1, GaussianInt{1, 0});
    const std::int64_t dev = std::abs(lam - szmidt_coefficient(q, character, report.split.l));
    ++report.ideals_checked;
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst = q;
    }
  }
  return report;
}

// --- smoothed values -----------------------------------------------------------

SmoothingWeights::SmoothingWeights(double V) : V_(V), max_norm_(smoothing_cutoff(V)) {
  w_.assign(static_cast<std::size_t>(max_norm_) + 1, 0.0);
  for (std::int64_t m = 1; m <= max_norm_; ++m) {
    const double x = static_cast<double>(m);
    w_[m] = std::exp(-x / V) / x;
  }
}

double smoothed_tail_bound(double V) {
  // sum_{N(q) > 40V} N(q) e^{-N/V} / N(q) <= (pi/4 + 1) (V + 1) e^{-40}
  return (std::numbers::pi / 4 + 1) * (V + 1) * std::exp(-40.0);
}

SmoothedValue zagier_L1(GaussianInt n, const SmoothingWeights& w, Execution exec) {
  const GaussianInt delta = n * n - GaussianInt{4, 0};
  if (delta.is_zero() || is_perfect_square(delta))
    throw DomainError("zagier_L1: n^2 - 4 is a perfect square for n = " + to_string(n));
  const std::int64_t max_norm = w.max_norm();
  const auto table = IdealTable::shared(max_norm);
  const std::size_t count = table->count_up_to(max_norm);
  const auto pp = lambda_prime_powers(*table, primes_up_to(*table, max_norm), max_norm, n, exec);
  std::vector<std::int64_t> values(count);
  table->expand_multiplicative<std::int64_t>(pp, values);
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < count; ++i)
    if (values[i] != 0) acc.add(static_cast<double>(values[i]) * w((*table)[i].norm()));
  return {delta, w.V(), acc.value(), smoothed_tail_bound(w.V()), 0.5};
}

SmoothedValue zagier_L1(GaussianInt n, double V, Execution exec) { return zagier_L1(n, SmoothingWeights(V), exec); }

SmoothedValue zagier_L1_reference(GaussianInt n, double V, RhoMethod method) {
  const auto d = Discriminant::from_trace(n);
  if (d.delta.is_zero() || is_perfect_square(d.delta))
    throw DomainError("zagier_L1_reference: n^2 - 4 is a perfect square");
  const std::int64_t max_norm = smoothing_cutoff(V);
  CompensatedSum<double> acc;
  for (const auto& q : ideals_up_to(max_norm)) {
    const double x = static_cast<double>(q.norm());
    acc.add(static_cast<double>(lambda(q, d, method)) * std::exp(-x / V) / x);
  }
  return {d.delta, V, acc.value(), smoothed_tail_bound(V), 0.5};
}

double normalization_sum(double V, Execution exec) {
  const std::int64_t max_norm = smoothing_cutoff(V);
  const auto table = IdealTable::shared(max_norm);
  const std::size_t count = table->count_up_to(max_norm);
  std::vector<double> pp(table->prime_power_slots(), 0.0);
  for (const auto& pi : table->primes()) {
    if (pi.norm > max_norm) break;
    for (int k = 1; k <= pi.max_exponent; ++k)
      pp[pi.power_offset + k - 1] = (k % 2 == 0) ? 1.0 : -1.0 / static_cast<double>(pi.norm);
  }
  std::vector<double> c(count);
  table->expand_multiplicative<double>(pp, c);
  std::vector<double> terms(count);
  auto term = [&](std::size_t i) {
    const double x = static_cast<double>((*table)[i].norm());
    terms[i] = c[i] * std::exp(-x / V) / x;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::size_t i = 0; i < count; ++i) term(i);
  } else {
    for (std::size_t i = 0; i < count; ++i) term(i);
  }
  return pairwise_sum(terms);
}

RVBound R_V_bound(double sigma, double V, double Q, double card, double NM, double theta) {
  if (!(sigma >= 0.5 && sigma < 1)) throw DomainError("R_V_bound: sigma must lie in [1/2, 1)");
  RVBound b;
  b.density_term = NM * std::pow(Q, 10 * (1 - sigma) / (3 - sigma));
  b.smoothing_term = card * std::pow(V, sigma - 1) * std::pow(Q, theta);
  return b;
}

RVEstimate R_V_estimate(GaussianInt n, double V, double sigma, double theta) {
  RVEstimate out;
  out.sigma = sigma;
  const double g1 = zagier_L1(n, V, Execution::parallel).value;
  const double g8 = zagier_L1(n, 8 * V, Execution::parallel).value;
  out.proxy = std::abs(g1 - g8);
  const GaussianInt delta = n * n - GaussianInt{4, 0};
  out.bound = R_V_bound(sigma, V, static_cast<double>(delta.norm()), 1, 1, theta);
  return out;
}

}  // namespace pgt
