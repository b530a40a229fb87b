#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pdepot/experiment.hpp"

namespace pdepot {

/// CSV with header round,algorithm,prediction,loss,regret_or_wealth,bound.
/// One round-0 summary row per algorithm carries the final value and its
/// standard error, so write/read round-trips losslessly.
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& in);

/// A named curve for the SVG plots.
struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal self-contained SVG line plot; byte-deterministic.
void write_svg_plot(std::ostream& out, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<Series>& series);

/// Per-round headline metric (regret / wealth / TotalLoss) vs round.
void write_metric_svg(std::ostream& out, const std::string& title,
                      const std::vector<RunRecord>& records);

/// Per-round predictions vs round (the trajectory view).
void write_trajectory_svg(std::ostream& out, const std::string& title,
                          const std::vector<RunRecord>& records);

/// KT regret minus Erfi regret at fixed T over a grid of comparators.
Series kt_minus_erfi_regret(const std::vector<double>& u_grid, int T, double C,
                            double eps);

/// Writes <stem>.csv and/or <stem>_metric.svg + <stem>_trajectory.svg under
/// `dir`; format is "csv", "svg-plot" or "both". Returns the file paths.
std::vector<std::string> emit_results(const std::vector<RunRecord>& records,
                                      const std::string& format,
                                      const std::string& dir,
                                      const std::string& stem);

}  // namespace pdepot
