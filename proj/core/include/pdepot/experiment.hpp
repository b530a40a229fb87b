#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdepot/dataset.hpp"
#include "pdepot/olo.hpp"

namespace pdepot {

/// Experiment parameters; task-specific fields are u_star (abs1d),
/// gamma (regression) and runs (stochastic1d / shuffled regression).
struct ExperimentConfig {
  std::string task;  // abs1d | stochastic1d | regression
  int T = 500;
  double u_star = 10.0;
  double gamma = 1.0;
  std::vector<LearnerConfig> algorithms;
  int runs = 1;
  std::uint64_t seed = 0;
  std::string output_dir = ".";
  bool shuffle = false;  // regression row order is file order by default
};

/// One algorithm's run (or mean over replications). `cumulative` holds
/// the per-round headline metric: regret for abs1d, negative cumulative
/// loss (wealth) for stochastic1d, TotalLoss for regression. `bound` is
/// the matching closed-form regret bound per round, empty when the
/// algorithm has no evaluator.
struct RunRecord {
  std::string algorithm;
  std::vector<double> predictions;
  std::vector<double> losses;
  std::vector<double> cumulative;
  std::vector<double> bound;
  double final_value = 0.0;
  double final_stderr = 0.0;
};

/// Absolute-value loss |x - u*| with gradient +1 when x >= u*, else -1;
/// regret(u*) tracked per round, closed-form bounds alongside.
std::vector<RunRecord> run_abs1d(const ExperimentConfig& config);

/// I.i.d. gradients with P[g = -1] = 0.6 (coin mean +0.2 under c = -g);
/// `runs` seeded replications, reporting the mean negative cumulative
/// loss per round and its final standard error.
std::vector<RunRecord> run_stochastic1d(const ExperimentConfig& config);

/// Streaming linear regression with absolute loss on preprocessed rows;
/// targets are scaled by gamma. Learners run through the polar reduction
/// in the data's dimension. Throws when T exceeds the dataset length.
std::vector<RunRecord> run_regression(const ExperimentConfig& config,
                                      const DatasetMatrix& data);

/// Dispatch on config.task; regression uses `data`.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config,
                                      const DatasetMatrix* data = nullptr);

}  // namespace pdepot
