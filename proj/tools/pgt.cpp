// pgt: command-line front end.
//
// Flags take precedence over values read with --config (key=value lines,
// subcommand keys as "psi.x=1e4" or under a [psi] section), which take
// precedence over built-in defaults. PGT_THREADS sets the default thread count.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgt/acceptance.hpp"
#include "pgt/exponents.hpp"
#include "pgt/geodesics.hpp"
#include "pgt/lattice.hpp"
#include "pgt/lfunctions.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quad_counts.hpp"
#include "pgt/spectral.hpp"

using namespace pgt;

namespace {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", *d);
    return buf;
  }
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write(const Table& t, const std::string& format, const std::string& path) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = t.kind;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json o;
      for (std::size_t i = 0; i < row.size(); ++i)
        std::visit([&](const auto& v) { o[t.columns[i]] = v; }, row[i]);
      j["results"].push_back(o);
    }
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
      out << "\n";
    }
  }
  if (path.empty() || path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    f << out.str();
  }
}

std::vector<double> parse_grid(const std::string& spec, int points) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  }
  return log_grid(std::stod(spec.substr(0, colon)), std::stod(spec.substr(colon + 1)), points);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime geodesic computations over the Gaussian integers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  std::string format = "csv", output;
  int threads = 0;
  double tol = 1e-6;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "Output path (default standard output)");
  app.add_option("--threads", threads, "Thread count (default PGT_THREADS or all cores)")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "Tolerance; L-values are evaluated exactly, so this is accepted and unused")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");

  auto* psi_cmd = app.add_subcommand("psi", "Psi(X) from the trace sum");
  double psi_x = 1e3;
  psi_cmd->add_option("--x", psi_x, "X")->required();

  auto* interval_cmd = app.add_subcommand("interval", "Psi(X + Y) - Psi(X) with Y = X^nu");
  double int_x = 1e3, int_nu = 0.7;
  interval_cmd->add_option("--x", int_x, "X")->required();
  interval_cmd->add_option("--nu", int_nu, "nu")->required();

  auto* smoothed_cmd = app.add_subcommand("smoothed", "Kernel-smoothed Psi(X, k) with k supported in (Y, 2Y)");
  double sm_x = 1e3, sm_y = 100;
  smoothed_cmd->add_option("--x", sm_x, "X")->required();
  smoothed_cmd->add_option("--y", sm_y, "Y")->required();

  auto* lfun_cmd = app.add_subcommand("lfun", "L(1, n^2 - 4) for a trace n");
  std::string lfun_n;
  double lfun_v = 0;
  lfun_cmd->add_option("--n", lfun_n, "Trace, e.g. 3+2i")->required();
  lfun_cmd->add_option("--v", lfun_v, "Also report the smoothed value G_V at this V");

  auto* circle_cmd = app.add_subcommand("circle", "Shifted-circle lattice counts and the eta fit");
  std::string m_grid = "1e3:1e6";
  int centers = 100, points = 13;
  circle_cmd->add_option("--m-grid", m_grid, "lo:hi (log-spaced) or a comma list");
  circle_cmd->add_option("--centers", centers, "Random centers")->check(CLI::PositiveNumber);
  circle_cmd->add_option("--points", points, "Grid points for lo:hi")->check(CLI::Range(2, 1000));

  auto* kl_cmd = app.add_subcommand("kloosterman", "S(m, n, c) and its Weil ratio");
  std::string kl_m = "1", kl_n = "1", kl_c;
  kl_cmd->add_option("--m", kl_m, "m");
  kl_cmd->add_option("--n", kl_n, "n");
  kl_cmd->add_option("--c", kl_c, "Modulus c")->required();

  auto* spec_cmd = app.add_subcommand("spectral", "S(T, X) ratios from an eigenvalue file");
  std::string eig_file, t_grid = "10,20,40", x_grid = "10,100,1000";
  spec_cmd->add_option("--eigenvalues", eig_file, "Eigenvalue file")->required()->check(CLI::ExistingFile);
  spec_cmd->add_option("--t-grid", t_grid, "T values");
  spec_cmd->add_option("--x-grid", x_grid, "X values");

  auto* exp_cmd = app.add_subcommand("exponents", "Exponent table");
  std::string theta = "1/6";
  double exp_nu = 0, exp_eta = 0;
  exp_cmd->add_option("--theta", theta, "Subconvexity exponent theta (rational)");
  exp_cmd->add_option("--nu", exp_nu, "nu for beta(nu) and alpha(nu, eta)");
  exp_cmd->add_option("--eta", exp_eta, "eta for alpha(nu, eta)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  bool quick = false;
  std::string verify_eig;
  verify_cmd->add_flag("--quick", quick, "Reduced cutoffs");
  verify_cmd->add_option("--eigenvalues", verify_eig, "Eigenvalue file for criterion 11")->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_thread_count(threads);

  try {
    if (psi_cmd->parsed()) {
      const auto r = psi(psi_x);
      write({"psi", {"X", "psi", "main_half_X_squared", "remainder", "constant_used"},
             {{r.X, r.psi, r.main, r.remainder, r.constant_used}}},
            format, output);
    } else if (interval_cmd->parsed()) {
      const double Y = std::pow(int_x, int_nu);
      const auto r = psi_short_interval(int_x, Y);
      write({"interval", {"X", "Y", "nu", "difference", "main_XY_plus_half_Y_squared", "remainder", "normalized_error"},
             {{r.X, r.Y, int_nu, r.difference, r.main, r.remainder, r.normalized_error}}},
            format, output);
    } else if (smoothed_cmd->parsed()) {
      const KernelSpec k(sm_y);
      const double v = psi_smoothed(sm_x, k);
      write({"smoothed", {"X", "Y", "psi_smoothed", "psi_X", "psi_X_plus_2Y", "kernel_mass"},
             {{sm_x, sm_y, v, psi(sm_x).psi, psi(sm_x + 2 * sm_y).psi, k.mass()}}},
            format, output);
    } else if (lfun_cmd->parsed()) {
      const auto n = parse_gaussian(lfun_n);
      const auto z = zagier_L1_exact(n);
      Table t{"lfun",
              {"n", "delta", "D", "l", "even_value", "conductor_norm", "T_l_at_1", "L_chi_at_1", "L1_delta"},
              {{to_string(n), to_string(z.split.delta), to_string(z.split.D), to_string(z.split.l.value()),
                std::int64_t{z.split.even_value}, static_cast<std::int64_t>(z.f.analytic() / 4), z.T_l, z.L, z.value}}};
      if (lfun_v > 0) {
        t.columns.push_back("G_V");
        t.columns.push_back("V");
        t.rows[0].push_back(zagier_L1(n, lfun_v, Execution::parallel).value);
        t.rows[0].push_back(lfun_v);
      }
      write(t, format, output);
    } else if (circle_cmd->parsed()) {
      const auto fit = eta_fit(parse_grid(m_grid, points), centers, seed);
      Table t{"eta_fit", {"M", "max_remainder", "fitted_exponent_eta", "constant", "r_squared"}, {}};
      for (const auto& [M, r] : fit.samples) t.rows.push_back({M, r, fit.fitted_exponent, fit.constant, fit.fit.r_squared});
      write(t, format, output);
    } else if (kl_cmd->parsed()) {
      const auto s = kloosterman(parse_gaussian(kl_m), parse_gaussian(kl_n), canonical_rep(parse_gaussian(kl_c)));
      write({"kloosterman", {"m", "n", "c", "re", "im", "abs", "weil_ratio"},
             {{to_string(s.m), to_string(s.n), to_string(s.c.value()), s.value.real(), s.value.imag(),
               std::abs(s.value), weil_ratio(s)}}},
            format, output);
    } else if (spec_cmd->parsed()) {
      const auto table = load_eigenvalues(eig_file);
      Table t{"stx", {"T", "X", "count", "abs_S", "ratio_S_over_T2_X14"}, {}};
      for (const auto& r : stx_bound_report(table, parse_grid(t_grid, 0), parse_grid(x_grid, 0)))
        t.rows.push_back({r.T, r.X, table.count_up_to(r.T), r.magnitude, r.ratio});
      write(t, format, output);
    } else if (exp_cmd->parsed()) {
      const auto th = parse_rational(theta);
      const auto c = corollary_exponents(th);
      const auto u = uncond_system();
      const auto si = short_interval_exponents(th);
      auto rat = [](const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); };
      Table t{"exponents", {"quantity", "value", "exact"}, {}};
      auto add = [&](const std::string& name, const Rational& r) { t.rows.push_back({name, rat(r), to_string(r)}); };
      t.rows.push_back({std::string("theta"), rat(th), to_string(th)});
      add("exponent_subconvex", c.subconvex);
      add("exponent_mean_lindelof", c.mean_lindelof);
      add("exponent_trivial_S", c.trivial);
      add("Y_exponent_subconvex", c.Y_subconvex);
      add("Y_exponent_mean_lindelof", c.Y_mean_lindelof);
      add("Y_exponent_trivial_S", c.Y_trivial);
      add("short_interval_X_exponent", si.X_subconvex);
      add("short_interval_Y_exponent", si.Y_subconvex);
      add("gauss_regime_X_exponent", si.X_gauss);
      add("gauss_regime_Y_exponent", si.Y_gauss);
      add("V_X_exponent", si.V_X);
      add("V_Y_exponent", si.V_Y);
      t.rows.push_back({std::string("sigma_uncond"), u.sigma, std::string("(619-sqrt(31049))/472")});
      t.rows.push_back({std::string("nu_uncond"), u.nu, std::string("(197-sqrt(31049))/32")});
      t.rows.push_back({std::string("half_beta_uncond"), u.beta / 2, std::string("(177-sqrt(31049))/32")});
      t.rows.push_back({std::string("pointwise_exponent"), u.pointwise_exponent, std::string("13/8-beta/2")});
      if (exp_nu > 0) {
        const auto b = solve_beta(exp_nu);
        t.rows.push_back({std::string("sigma_beta_nu"), b.sigma, std::string("")});
        t.rows.push_back({std::string("beta_nu"), b.beta, std::string("")});
        if (exp_eta > 0) {
          const auto a = solve_alpha(exp_nu, exp_eta);
          t.rows.push_back({std::string("sigma_alpha_nu_eta"), a.sigma, std::string("")});
          t.rows.push_back({std::string("alpha_nu_eta"), a.alpha, std::string("")});
        }
      }
      write(t, format, output);
    } else if (verify_cmd->parsed()) {
      AcceptanceOptions opts;
      opts.quick = quick;
      if (!verify_eig.empty()) opts.eigenvalue_file = verify_eig;
      const auto results = run_acceptance(opts, [](const CriterionResult& r) {
        std::cout << format_line(r) << std::endl;
      });
      bool ok = true;
      for (const auto& r : results) ok = ok && (r.passed || r.skipped);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  (void)tol;
  return 0;
}
