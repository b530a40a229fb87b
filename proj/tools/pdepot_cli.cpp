// Command-line front end: experiment runner, invariant suites, and a
// regret-bound tabulator.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdepot/dataset.hpp"
#include "pdepot/experiment.hpp"
#include "pdepot/olo.hpp"
#include "pdepot/report.hpp"
#include "pdepot/verify.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> items;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PDE-potential coin-betting and unconstrained online learning"};
  app.require_subcommand(1);

  // --- run ---
  auto* run = app.add_subcommand("run", "Run an experiment task");
  std::string task = "abs1d";
  int T = 500;
  double u_star = 10.0;
  double gamma = 1.0;
  std::string algs = "erfi,exp,kt";
  double C = 1.0;
  double eps = std::numeric_limits<double>::quiet_NaN();
  int runs = 1;
  std::uint64_t seed = 0;
  std::string data_path;
  std::string out_dir = ".";
  std::string format = "csv";
  bool shuffle = false;
  run->add_option("--task", task, "abs1d | stochastic1d | regression")
      ->check(CLI::IsMember({"abs1d", "stochastic1d", "regression"}));
  run->add_option("--T", T, "horizon")->check(CLI::PositiveNumber);
  run->add_option("--u-star", u_star, "comparator for abs1d");
  run->add_option("--gamma", gamma, "target scale for regression");
  run->add_option("--algs", algs,
                  "comma list of erfi|exp|ogd-potential|linear|kt");
  run->add_option("--C", C, "potential scale")->check(CLI::PositiveNumber);
  run->add_option("--eps", eps, "KT initial wealth (default sqrt(e)*C)");
  run->add_option("--runs", runs, "replications")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "random seed");
  run->add_option("--data", data_path,
                  "regression CSV (target first column); falls back to "
                  "$PDEPOT_DATASET, then to synthetic data");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--format", format, "csv | svg-plot | both")
      ->check(CLI::IsMember({"csv", "svg-plot", "both"}));
  run->add_flag("--shuffle", shuffle, "shuffle regression row order per run");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "pde | ito | bounds | tail | all")
      ->check(CLI::IsMember({"pde", "ito", "bounds", "tail", "all"}));

  // --- bounds ---
  auto* bounds = app.add_subcommand("bounds", "Tabulate regret bounds");
  double b_C = 1.0, b_T = 500.0, b_u = 10.0;
  double b_eps = std::numeric_limits<double>::quiet_NaN();
  bounds->add_option("--C", b_C, "potential scale")->check(CLI::PositiveNumber);
  bounds->add_option("--T", b_T, "horizon")->check(CLI::PositiveNumber);
  bounds->add_option("--u", b_u, "comparator norm");
  bounds->add_option("--eps", b_eps, "KT initial wealth (default sqrt(e)*C)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      pdepot::ExperimentConfig config;
      config.task = task;
      config.T = T;
      config.u_star = u_star;
      config.gamma = gamma;
      config.runs = runs;
      config.seed = seed;
      config.output_dir = out_dir;
      config.shuffle = shuffle;
      for (const std::string& a : split_list(algs)) {
        config.algorithms.push_back({a, C, eps, 1});
      }

      std::vector<pdepot::RunRecord> records;
      if (task == "regression") {
        if (data_path.empty()) {
          if (const char* env = std::getenv("PDEPOT_DATASET")) data_path = env;
        }
        pdepot::DatasetMatrix data;
        if (!data_path.empty()) {
          data = pdepot::load_dataset(data_path, T);
          std::cerr << "loaded " << data.rows() << " rows x " << data.cols()
                    << " features from " << data_path << "\n";
        } else {
          data = pdepot::synthetic_regression(seed, T, 90);
          std::cerr << "no dataset given, using synthetic data (d=90)\n";
        }
        records = pdepot::run_regression(config, data);
      } else {
        records = pdepot::run_experiment(config);
      }

      for (const pdepot::RunRecord& rec : records) {
        std::printf("%-14s final %-12s = %.6f", rec.algorithm.c_str(),
                    task == "abs1d"        ? "regret"
                    : task == "regression" ? "TotalLoss"
                                           : "mean wealth",
                    rec.final_value);
        if (rec.final_stderr > 0) std::printf(" +- %.6f", rec.final_stderr);
        std::printf("\n");
      }
      const auto paths =
          pdepot::emit_results(records, format, out_dir, task);
      for (const std::string& p : paths) std::cerr << "wrote " << p << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const bool ok = pdepot::verify_suite(suite, std::cout);
      if (!ok) std::cerr << "verification failed\n";
      return ok ? 0 : 1;
    }

    if (bounds->parsed()) {
      const double eff_eps =
          std::isnan(b_eps) ? std::sqrt(M_E) * b_C : b_eps;
      std::printf("C=%g T=%g u=%g eps=%g\n", b_C, b_T, b_u, eff_eps);
      std::printf("thm41  (erfi, closed form) = %.6f\n",
                  pdepot::bound_thm41(b_C, b_T, std::fabs(b_u)));
      std::printf("corC4  (erfi, conjugate)   = %.6f\n",
                  pdepot::bound_corC4(pdepot::Potential::erfi(b_C), b_T,
                                      std::fabs(b_u)));
      std::printf("thmC2  (exp)               = %.6f\n",
                  pdepot::bound_thmC2(b_C, b_T, std::fabs(b_u)));
      std::printf("kt     (closed form)       = %.6f\n",
                  pdepot::bound_kt(eff_eps, b_T, b_u));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
