// chgdet: four routes to det(I - gamma K_s) for the confluent hypergeometric
// kernel, plus counting statistics and trajectory export.
//
// Exit codes: 0 success, 2 invalid flags, 3 numerical failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "chgdet/asymptotics.hpp"
#include "chgdet/painleve.hpp"
#include "chgdet/report.hpp"
#include "chgdet/stats.hpp"
#include "chgdet/toeplitz.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_to_json(const chgdet::RouteReport& r) {
  json j;
  j["schema"] = 1;
  j["route"] = chgdet::to_string(r.route);
  j["alpha"] = r.params.alpha;
  j["beta_im"] = r.params.b;
  j["gamma"] = r.params.gamma;
  j["s"] = r.s;
  j["value"] = r.value;
  j["meta"] = json::object();
  for (const auto& [k, v] : r.meta) j["meta"][k] = v;
  return j;
}

void report_to_csv(const chgdet::RouteReport& r, std::ostream& out) {
  out << "route,alpha,beta_im,gamma,s,value";
  for (const auto& [k, v] : r.meta) out << "," << k;
  out << "\n"
      << chgdet::to_string(r.route) << "," << fmt17(r.params.alpha) << ","
      << fmt17(r.params.b) << "," << fmt17(r.params.gamma) << "," << fmt17(r.s)
      << "," << fmt17(r.value);
  for (const auto& [k, v] : r.meta) out << "," << fmt17(v);
  out << "\n";
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw chgdet::DomainError(flag + ": cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw chgdet::DomainError(flag + ": empty list");
  return out;
}

struct CommonFlags {
  double alpha = 0.0, beta_im = 0.0, gamma = 0.0;

  chgdet::KernelParams params() const { return {alpha, beta_im, gamma}; }

  void add_to(CLI::App* cmd, bool with_gamma = true) {
    cmd->add_option("--alpha", alpha, "algebraic singularity exponent (> -1/2)")
        ->check(CLI::Range(-0.4999999, 1e9));
    cmd->add_option("--beta-im", beta_im, "imaginary part b of beta = i b");
    if (with_gamma)
      cmd->add_option("--gamma", gamma, "thinning survival parameter in [0, 1)")
          ->check(CLI::Range(0.0, 0.9999999999));
  }
};

int run(int argc, char** argv) {
  CLI::App app{"deformed Fredholm determinant of the confluent hypergeometric kernel"};
  app.require_subcommand(1);

  // ---- det ----
  auto* det = app.add_subcommand("det", "log-determinant by one route");
  CommonFlags det_flags;
  det_flags.add_to(det);
  double det_s = 1.0, det_tol = 0.0;
  int det_nodes = 0;
  std::string det_route = "quadrature", det_format = "json";
  det->add_option("--s", det_s, "half-gap length")->check(CLI::PositiveNumber);
  det->add_option("--nodes", det_nodes, "initial quadrature node count");
  det->add_option("--tol", det_tol, "route tolerance");
  det->add_option("--route", det_route, "quadrature|asymptotic|painleve|toeplitz");
  det->add_option("--format", det_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // ---- compare ----
  auto* cmp = app.add_subcommand("compare", "cross-route comparison table");
  CommonFlags cmp_flags;
  cmp_flags.add_to(cmp);
  std::string cmp_slist, cmp_routes = "quadrature,asymptotic", cmp_format = "json";
  double cmp_tol = 0.0;
  int cmp_nodes = 0;
  cmp->add_option("--s-list", cmp_slist, "comma-separated half-gap lengths")->required();
  cmp->add_option("--routes", cmp_routes, "comma-separated route names");
  cmp->add_option("--nodes", cmp_nodes, "initial quadrature node count");
  cmp->add_option("--tol", cmp_tol, "route tolerance");
  cmp->add_option("--format", cmp_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // ---- stats ----
  auto* stats = app.add_subcommand("stats", "counting-function statistics");
  CommonFlags stats_flags;
  stats_flags.add_to(stats, /*with_gamma=*/false);
  double stats_s = 1.0;
  int stats_nodes = 0;
  stats->add_option("--s", stats_s, "half-gap length")->check(CLI::PositiveNumber);
  stats->add_option("--nodes", stats_nodes, "quadrature node count");

  // ---- painleve ----
  auto* pv = app.add_subcommand("painleve", "trajectory CSV export");
  CommonFlags pv_flags;
  pv_flags.add_to(pv);
  double pv_t0 = 1e-3, pv_t1 = 10.0, pv_tol = 1e-10;
  std::string pv_out;
  pv->add_option("--t0", pv_t0, "starting |tau|")->check(CLI::Range(1e-12, 0.01));
  pv->add_option("--t1", pv_t1, "final |tau|")->check(CLI::PositiveNumber);
  pv->add_option("--tol", pv_tol, "integration tolerance");
  pv->add_option("--out", pv_out, "output file (default stdout)");

  // ---- toeplitz ----
  auto* toep = app.add_subcommand("toeplitz", "scaling-limit ratio table");
  CommonFlags toep_flags;
  toep_flags.add_to(toep);
  double toep_s = 1.0;
  std::string toep_nlist = "64,128,256", toep_format = "json";
  toep->add_option("--s", toep_s, "half-gap length")->check(CLI::PositiveNumber);
  toep->add_option("--n-list", toep_nlist, "comma-separated Toeplitz sizes");
  toep->add_option("--format", toep_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (det->parsed()) {
      chgdet::RouteReport r = chgdet::evaluate_route(
          chgdet::route_from_string(det_route), det_flags.params(), det_s,
          det_nodes, det_tol, 0.0, det_nodes);
      if (det_format == "csv")
        report_to_csv(r, std::cout);
      else
        std::cout << report_to_json(r).dump(2) << "\n";
    } else if (cmp->parsed()) {
      std::vector<double> s_list = parse_double_list(cmp_slist, "--s-list");
      std::vector<chgdet::Route> routes;
      {
        std::stringstream ss(cmp_routes);
        std::string item;
        while (std::getline(ss, item, ','))
          routes.push_back(chgdet::route_from_string(item));
        if (routes.empty()) throw chgdet::DomainError("--routes: empty list");
      }
      json rows = json::array();
      for (double s : s_list) {
        std::vector<chgdet::RouteReport> reports;
        for (chgdet::Route route : routes)
          reports.push_back(chgdet::evaluate_route(route, cmp_flags.params(), s,
                                                   cmp_nodes, cmp_tol));
        for (size_t i = 0; i < reports.size(); ++i) {
          json row;
          row["s"] = s;
          row["route"] = chgdet::to_string(reports[i].route);
          row["value"] = reports[i].value;
          for (size_t j = 0; j < i; ++j)
            row["gap_" + chgdet::to_string(reports[j].route)] =
                std::abs(reports[i].value - reports[j].value);
          if (reports[i].route == chgdet::Route::asymptotic && i > 0)
            row["norm_gap"] = std::abs(reports[i].value - reports[0].value) * s;
          rows.push_back(row);
        }
      }
      if (cmp_format == "csv") {
        std::cout << "s,route,value,gap,norm_gap\n";
        for (const auto& row : rows) {
          std::cout << fmt17(row["s"].get<double>()) << ","
                    << row["route"].get<std::string>() << ","
                    << fmt17(row["value"].get<double>()) << ",";
          // gap vs the first listed route
          std::string gap_key = "gap_" + chgdet::to_string(routes[0]);
          if (row.contains(gap_key)) std::cout << fmt17(row[gap_key].get<double>());
          std::cout << ",";
          if (row.contains("norm_gap")) std::cout << fmt17(row["norm_gap"].get<double>());
          std::cout << "\n";
        }
      } else {
        json out;
        out["schema"] = 1;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
      }
    } else if (stats->parsed()) {
      chgdet::KernelParams p = stats_flags.params();
      p.validate();
      chgdet::CountingSummary summary =
          chgdet::counting_summary(p, stats_s, stats_nodes);
      json j;
      j["schema"] = 1;
      j["alpha"] = p.alpha;
      j["beta_im"] = p.b;
      j["s"] = stats_s;
      j["e_n"] = summary.e_n;
      j["var_n"] = summary.var_n;
      j["ks_normal"] = summary.ks_normal;
      j["n_eigs_used"] = summary.n_eigs_used;
      if (stats_s > 1.0) {
        chgdet::CountingRefs refs = chgdet::counting_refs(p.alpha, stats_s);
        j["ref_mu"] = refs.mu;
        j["ref_sigma2"] = refs.sigma2;
        j["ref_var_const"] = refs.var_const;
        j["mean_gap"] = std::abs(summary.e_n - refs.mu);
        j["var_gap"] = std::abs(summary.var_n - (refs.sigma2 + refs.var_const));
      } else if (stats_s == 1.0) {
        j["ref_sigma2"] = 0.0;  // ln 1 = 0
      }
      std::cout << j.dump(2) << "\n";
    } else if (pv->parsed()) {
      chgdet::PVTrajectory traj =
          chgdet::pv_integrate(pv_flags.params(), pv_t0, pv_t1, pv_tol);
      if (pv_out.empty()) {
        chgdet::write_trajectory_csv(traj, std::cout);
      } else {
        std::ofstream f(pv_out);
        if (!f) throw chgdet::DomainError("--out: cannot open '" + pv_out + "'");
        chgdet::write_trajectory_csv(traj, f);
      }
    } else if (toep->parsed()) {
      std::vector<double> n_list = parse_double_list(toep_nlist, "--n-list");
      json rows = json::array();
      for (double nd : n_list) {
        int n = int(nd);
        if (n != nd) throw chgdet::DomainError("--n-list: entries must be integers");
        double value = chgdet::scaling_limit_check(toep_flags.params(), toep_s, n);
        json row;
        row["n"] = n;
        row["value"] = value;
        rows.push_back(row);
      }
      if (toep_format == "csv") {
        std::cout << "n,value\n";
        for (const auto& row : rows)
          std::cout << row["n"].get<int>() << "," << fmt17(row["value"].get<double>())
                    << "\n";
      } else {
        json out;
        out["schema"] = 1;
        out["alpha"] = toep_flags.alpha;
        out["beta_im"] = toep_flags.beta_im;
        out["gamma"] = toep_flags.gamma;
        out["s"] = toep_s;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
      }
    }
  } catch (const chgdet::DomainError& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
