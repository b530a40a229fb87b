#include "pdepot/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pdepot {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double kt_eps(const LearnerConfig& cfg) {
  return std::isnan(cfg.eps) ? std::sqrt(M_E) * cfg.C : cfg.eps;
}

// Closed-form regret bound matching the learner, or NaN when it has none.
double bound_at(const LearnerConfig& cfg, double t, double u_norm) {
  if (cfg.algorithm == "erfi") {
    return bound_corC4(Potential::erfi(cfg.C), t, u_norm);
  }
  if (cfg.algorithm == "exp") return bound_thmC2(cfg.C, t, u_norm);
  if (cfg.algorithm == "kt") return bound_kt(kt_eps(cfg), t, u_norm);
  return std::numeric_limits<double>::quiet_NaN();
}

void check_config(const ExperimentConfig& config) {
  if (config.T < 1) throw std::invalid_argument("experiment: T must be >= 1");
  if (config.runs < 1) throw std::invalid_argument("experiment: runs must be >= 1");
  if (config.algorithms.empty()) {
    throw std::invalid_argument("experiment: no algorithms configured");
  }
}

}  // namespace

std::vector<RunRecord> run_abs1d(const ExperimentConfig& config) {
  check_config(config);
  std::vector<RunRecord> records;
  records.reserve(config.algorithms.size());
  for (const LearnerConfig& cfg : config.algorithms) {
    auto learner = make_learner_1d(cfg);
    RunRecord rec;
    rec.algorithm = cfg.algorithm;
    double regret = 0.0;
    const bool has_bound = !std::isnan(bound_at(cfg, 1.0, 0.0));
    for (int t = 1; t <= config.T; ++t) {
      const double x = learner->predict();
      const double g = x >= config.u_star ? 1.0 : -1.0;
      regret += g * (x - config.u_star);  // = |x - u*|
      rec.predictions.push_back(x);
      rec.losses.push_back(std::fabs(x - config.u_star));
      rec.cumulative.push_back(regret);
      if (has_bound) {
        rec.bound.push_back(bound_at(cfg, t, std::fabs(config.u_star)));
      }
      learner->update(g);
    }
    rec.final_value = regret;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RunRecord> run_stochastic1d(const ExperimentConfig& config) {
  check_config(config);
  const std::size_t n_alg = config.algorithms.size();
  const std::size_t T = static_cast<std::size_t>(config.T);

  std::vector<RunRecord> records(n_alg);
  for (std::size_t a = 0; a < n_alg; ++a) {
    records[a].algorithm = config.algorithms[a].algorithm;
    records[a].predictions.assign(T, 0.0);
    records[a].losses.assign(T, 0.0);
    records[a].cumulative.assign(T, 0.0);
  }
  std::vector<std::vector<double>> finals(n_alg);

  std::vector<double> g(T);
  for (int r = 0; r < config.runs; ++r) {
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(r));
    // Coin mean +0.2 under c = -g.
    for (double& gi : g) gi = uniform01(rng) < 0.6 ? -1.0 : 1.0;

    for (std::size_t a = 0; a < n_alg; ++a) {
      auto learner = make_learner_1d(config.algorithms[a]);
      double wealth = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        const double x = learner->predict();
        wealth -= g[t] * x;
        records[a].predictions[t] += x;
        records[a].losses[t] += g[t] * x;
        records[a].cumulative[t] += wealth;
        learner->update(g[t]);
      }
      finals[a].push_back(wealth);
    }
  }

  const double inv = 1.0 / config.runs;
  for (std::size_t a = 0; a < n_alg; ++a) {
    for (std::size_t t = 0; t < T; ++t) {
      records[a].predictions[t] *= inv;
      records[a].losses[t] *= inv;
      records[a].cumulative[t] *= inv;
    }
    const double mean =
        std::accumulate(finals[a].begin(), finals[a].end(), 0.0) * inv;
    double var = 0.0;
    for (double v : finals[a]) var += (v - mean) * (v - mean);
    records[a].final_value = mean;
    records[a].final_stderr =
        config.runs > 1
            ? std::sqrt(var / (config.runs - 1)) / std::sqrt(config.runs)
            : 0.0;
  }
  return records;
}

std::vector<RunRecord> run_regression(const ExperimentConfig& config,
                                      const DatasetMatrix& data) {
  check_config(config);
  if (config.T > data.rows()) {
    throw std::invalid_argument("run_regression: T exceeds dataset length");
  }
  const int d = data.cols();
  const std::size_t n_alg = config.algorithms.size();
  const std::size_t T = static_cast<std::size_t>(config.T);

  std::vector<RunRecord> records(n_alg);
  for (std::size_t a = 0; a < n_alg; ++a) {
    records[a].algorithm = config.algorithms[a].algorithm;
    records[a].predictions.assign(T, 0.0);
    records[a].losses.assign(T, 0.0);
    records[a].cumulative.assign(T, 0.0);
  }
  std::vector<std::vector<double>> finals(n_alg);

  std::vector<std::size_t> order(T);
  std::vector<double> neg(static_cast<std::size_t>(d));
  for (int r = 0; r < config.runs; ++r) {
    std::iota(order.begin(), order.end(), 0);
    if (config.shuffle) {
      std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(r));
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::size_t a = 0; a < n_alg; ++a) {
      LearnerConfig cfg = config.algorithms[a];
      cfg.dimension = d;
      ReducedLearner learner = make_reduced_learner(cfg);
      double total_loss = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        const std::vector<double>& z = data.features[order[t]];
        const double y = config.gamma * data.targets[order[t]];
        const std::vector<double> x = learner.predict();
        double pred = 0.0;
        for (int j = 0; j < d; ++j) pred += z[j] * x[j];
        total_loss += std::fabs(pred - y);
        records[a].predictions[t] += pred;
        records[a].losses[t] += std::fabs(pred - y);
        records[a].cumulative[t] += total_loss;
        if (pred >= y) {
          learner.update(z);
        } else {
          for (int j = 0; j < d; ++j) neg[j] = -z[j];
          learner.update(neg);
        }
      }
      finals[a].push_back(total_loss);
    }
    if (!config.shuffle) break;  // identical replications otherwise
  }

  const int effective_runs = config.shuffle ? config.runs : 1;
  const double inv = 1.0 / effective_runs;
  for (std::size_t a = 0; a < n_alg; ++a) {
    for (std::size_t t = 0; t < T; ++t) {
      records[a].predictions[t] *= inv;
      records[a].losses[t] *= inv;
      records[a].cumulative[t] *= inv;
    }
    const double mean =
        std::accumulate(finals[a].begin(), finals[a].end(), 0.0) * inv;
    double var = 0.0;
    for (double v : finals[a]) var += (v - mean) * (v - mean);
    records[a].final_value = mean;
    records[a].final_stderr =
        effective_runs > 1 ? std::sqrt(var / (effective_runs - 1)) /
                                 std::sqrt(effective_runs)
                           : 0.0;
  }
  return records;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config,
                                      const DatasetMatrix* data) {
  if (config.task == "abs1d") return run_abs1d(config);
  if (config.task == "stochastic1d") return run_stochastic1d(config);
  if (config.task == "regression") {
    if (data == nullptr) {
      throw std::invalid_argument("run_experiment: regression needs a dataset");
    }
    return run_regression(config, *data);
  }
  throw std::invalid_argument("run_experiment: unknown task '" + config.task +
                              "'");
}

}  // namespace pdepot
