#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdepot {

/// Regression data after ingestion: one target and one feature row per
/// example. After preprocessing every feature column lies in [0, 1] and
/// every nonzero row has unit Euclidean norm.
struct DatasetMatrix {
  std::vector<std::vector<double>> features;
  std::vector<double> targets;

  int rows() const { return static_cast<int>(targets.size()); }
  int cols() const {
    return features.empty() ? 0 : static_cast<int>(features.front().size());
  }
};

/// Column-wise min-max scaling to [0, 1] (constant columns map to 0),
/// then row-wise L2 normalization; rows that are zero after scaling are
/// left as zero vectors.
void preprocess(DatasetMatrix& data);

/// Numeric CSV, first column target, remaining columns features; applies
/// preprocess() before returning. Parse failures, empty files and
/// non-numeric cells are reported with 1-based row/column locations.
DatasetMatrix load_dataset(const std::string& path, int max_rows = -1);

/// Seeded random features in [0,1]^d, targets from a hidden linear model
/// plus bounded noise, preprocessed by the same pipeline.
DatasetMatrix synthetic_regression(std::uint64_t seed, int T, int d);

}  // namespace pdepot
