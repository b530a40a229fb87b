#include "pdepot/dataset.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pdepot {
namespace {

[[noreturn]] void cell_error(const char* what, int row, int col) {
  std::ostringstream msg;
  msg << "load_dataset: " << what << " at row " << row << ", column " << col;
  throw std::runtime_error(msg.str());
}

double parse_cell(const std::string& cell, int row, int col) {
  if (cell.empty()) cell_error("empty cell", row, col);
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    cell_error("non-numeric cell", row, col);
  }
  // Trailing junk after the number is a parse failure too.
  while (pos < cell.size() &&
         (cell[pos] == ' ' || cell[pos] == '\t' || cell[pos] == '\r')) {
    ++pos;
  }
  if (pos != cell.size()) cell_error("non-numeric cell", row, col);
  if (!std::isfinite(v)) cell_error("non-finite value", row, col);
  return v;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void preprocess(DatasetMatrix& data) {
  const int n = data.rows();
  const int d = data.cols();
  if (n == 0 || d == 0) return;

  for (int j = 0; j < d; ++j) {
    double lo = data.features[0][j], hi = lo;
    for (int i = 1; i < n; ++i) {
      lo = std::min(lo, data.features[i][j]);
      hi = std::max(hi, data.features[i][j]);
    }
    const double span = hi - lo;
    for (int i = 0; i < n; ++i) {
      data.features[i][j] =
          span > 0 ? (data.features[i][j] - lo) / span : 0.0;
    }
  }

  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (double x : data.features[i]) s += x * x;
    if (s > 0) {
      const double inv = 1.0 / std::sqrt(s);
      for (double& x : data.features[i]) x *= inv;
    }
  }
}

DatasetMatrix load_dataset(const std::string& path, int max_rows) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_dataset: cannot open " + path);

  DatasetMatrix data;
  std::string line;
  int row = 0;
  int width = -1;
  while (std::getline(in, line)) {
    if (max_rows >= 0 && row >= max_rows) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;

    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    int col = 0;
    while (std::getline(ss, cell, ',')) {
      ++col;
      cells.push_back(parse_cell(cell, row, col));
    }
    if (line.back() == ',') cell_error("empty cell", row, col + 1);
    if (cells.size() < 2) {
      cell_error("row needs a target and at least one feature", row, 1);
    }
    if (width < 0) {
      width = static_cast<int>(cells.size());
    } else if (static_cast<int>(cells.size()) != width) {
      cell_error("inconsistent column count", row,
                 static_cast<int>(cells.size()));
    }
    data.targets.push_back(cells[0]);
    data.features.emplace_back(cells.begin() + 1, cells.end());
  }
  if (data.rows() == 0) {
    throw std::runtime_error("load_dataset: empty file " + path);
  }
  preprocess(data);
  return data;
}

DatasetMatrix synthetic_regression(std::uint64_t seed, int T, int d) {
  if (T < 1 || d < 1) {
    throw std::invalid_argument("synthetic_regression: T and d must be >= 1");
  }
  std::mt19937_64 rng(seed);

  // Hidden positive linear model keeps the targets positive.
  std::vector<double> w(static_cast<std::size_t>(d));
  for (double& wi : w) wi = 0.2 + 1.8 * uniform01(rng);

  DatasetMatrix data;
  data.features.resize(static_cast<std::size_t>(T));
  data.targets.resize(static_cast<std::size_t>(T));
  for (int i = 0; i < T; ++i) {
    auto& row = data.features[i];
    row.resize(static_cast<std::size_t>(d));
    double y = 0.0;
    for (int j = 0; j < d; ++j) {
      row[j] = uniform01(rng);
      y += w[j] * row[j];
    }
    data.targets[i] = y / d + 0.05 * uniform01(rng);  // bounded noise
  }
  preprocess(data);
  return data;
}

}  // namespace pdepot
