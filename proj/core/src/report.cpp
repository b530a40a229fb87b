#include "pdepot/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pdepot {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_records_csv(std::ostream& out,
                       const std::vector<RunRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument("write_records_csv: no records");
  }
  out << "round,algorithm,prediction,loss,regret_or_wealth,bound\n";
  for (const RunRecord& rec : records) {
    out << "0," << rec.algorithm << ',' << fmt(rec.final_value) << ','
        << fmt(rec.final_stderr) << ",,\n";
    for (std::size_t t = 0; t < rec.predictions.size(); ++t) {
      out << (t + 1) << ',' << rec.algorithm << ',' << fmt(rec.predictions[t])
          << ',' << fmt(rec.losses[t]) << ',' << fmt(rec.cumulative[t]) << ',';
      if (t < rec.bound.size()) out << fmt(rec.bound[t]);
      out << '\n';
    }
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("read_records_csv: empty input");
  }
  auto find = [&](const std::string& alg) -> RunRecord& {
    for (RunRecord& r : records) {
      if (r.algorithm == alg) return r;
    }
    records.push_back(RunRecord{});
    records.back().algorithm = alg;
    return records.back();
  };
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> c = split_csv(line);
    if (c.size() != 6) {
      throw std::runtime_error("read_records_csv: bad column count at row " +
                               std::to_string(row));
    }
    RunRecord& rec = find(c[1]);
    const long t = std::stol(c[0]);
    if (t == 0) {
      rec.final_value = std::stod(c[2]);
      rec.final_stderr = std::stod(c[3]);
    } else {
      rec.predictions.push_back(std::stod(c[2]));
      rec.losses.push_back(std::stod(c[3]));
      rec.cumulative.push_back(std::stod(c[4]));
      if (!c[5].empty()) rec.bound.push_back(std::stod(c[5]));
    }
  }
  return records;
}

void write_svg_plot(std::ostream& out, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<Series>& series) {
  if (series.empty()) throw std::invalid_argument("write_svg_plot: no series");

  double x_lo = HUGE_VAL, x_hi = -HUGE_VAL, y_lo = HUGE_VAL, y_hi = -HUGE_VAL;
  for (const Series& s : series) {
    for (double v : s.x) {
      x_lo = std::min(x_lo, v);
      x_hi = std::max(x_hi, v);
    }
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  if (!(x_lo <= x_hi) || !(y_lo <= y_hi)) {
    throw std::invalid_argument("write_svg_plot: empty or non-finite series");
  }
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_hi = y_lo + 1;

  constexpr double kLeft = 70, kRight = 620, kTop = 40, kBottom = 430;
  const auto px = [&](double x) {
    return kLeft + (x - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
  };
  const auto py = [&](double y) {
    return kBottom - (y - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
  };

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#ff7f0e", "#9467bd", "#8c564b"};
  char buf[128];

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n";
  out << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";
  out << "<line x1=\"70\" y1=\"430\" x2=\"620\" y2=\"430\" stroke=\"black\"/>\n";
  out << "<line x1=\"70\" y1=\"40\" x2=\"70\" y2=\"430\" stroke=\"black\"/>\n";
  out << "<text x=\"345\" y=\"465\" text-anchor=\"middle\" font-size=\"12\">"
      << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"235\" font-size=\"12\" "
         "transform=\"rotate(-90 16 235)\" text-anchor=\"middle\">"
      << y_label << "</text>\n";
  std::snprintf(buf, sizeof(buf),
                "<text x=\"70\" y=\"445\" font-size=\"10\">%.6g</text>\n", x_lo);
  out << buf;
  std::snprintf(
      buf, sizeof(buf),
      "<text x=\"620\" y=\"445\" text-anchor=\"end\" font-size=\"10\">%.6g"
      "</text>\n",
      x_hi);
  out << buf;
  std::snprintf(
      buf, sizeof(buf),
      "<text x=\"64\" y=\"433\" text-anchor=\"end\" font-size=\"10\">%.6g"
      "</text>\n",
      y_lo);
  out << buf;
  std::snprintf(
      buf, sizeof(buf),
      "<text x=\"64\" y=\"44\" text-anchor=\"end\" font-size=\"10\">%.6g"
      "</text>\n",
      y_hi);
  out << buf;

  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kPalette[k % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
      out << buf;
    }
    out << "\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"84\" y=\"%zu\" font-size=\"12\" fill=\"%s\">",
                  56 + 16 * k, color);
    out << buf << s.label << "</text>\n";
  }
  out << "</svg>\n";
}

namespace {

std::vector<double> rounds_axis(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i + 1);
  return x;
}

}  // namespace

void write_metric_svg(std::ostream& out, const std::string& title,
                      const std::vector<RunRecord>& records) {
  std::vector<Series> series;
  for (const RunRecord& rec : records) {
    series.push_back(
        {rec.algorithm, rounds_axis(rec.cumulative.size()), rec.cumulative});
    if (!rec.bound.empty()) {
      series.push_back(
          {rec.algorithm + " bound", rounds_axis(rec.bound.size()), rec.bound});
    }
  }
  write_svg_plot(out, title, "round", "regret / wealth / total loss", series);
}

void write_trajectory_svg(std::ostream& out, const std::string& title,
                          const std::vector<RunRecord>& records) {
  std::vector<Series> series;
  for (const RunRecord& rec : records) {
    series.push_back(
        {rec.algorithm, rounds_axis(rec.predictions.size()), rec.predictions});
  }
  write_svg_plot(out, title, "round", "prediction", series);
}

Series kt_minus_erfi_regret(const std::vector<double>& u_grid, int T, double C,
                            double eps) {
  Series s;
  s.label = "kt - erfi regret";
  for (double u : u_grid) {
    ExperimentConfig cfg;
    cfg.task = "abs1d";
    cfg.T = T;
    cfg.u_star = u;
    cfg.algorithms = {{"erfi", C, std::numeric_limits<double>::quiet_NaN(), 1},
                      {"kt", C, eps, 1}};
    const std::vector<RunRecord> recs = run_abs1d(cfg);
    s.x.push_back(u);
    s.y.push_back(recs[1].final_value - recs[0].final_value);
  }
  return s;
}

std::vector<std::string> emit_results(const std::vector<RunRecord>& records,
                                      const std::string& format,
                                      const std::string& dir,
                                      const std::string& stem) {
  if (records.empty()) throw std::invalid_argument("emit_results: no records");
  if (format != "csv" && format != "svg-plot" && format != "both") {
    throw std::invalid_argument("emit_results: unknown format '" + format +
                                "'");
  }
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  const auto open = [&](const std::string& name) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_results: cannot write " + path);
    paths.push_back(path);
    return out;
  };
  if (format == "csv" || format == "both") {
    auto out = open(stem + ".csv");
    write_records_csv(out, records);
  }
  if (format == "svg-plot" || format == "both") {
    {
      auto out = open(stem + "_metric.svg");
      write_metric_svg(out, stem, records);
    }
    auto out = open(stem + "_trajectory.svg");
    write_trajectory_svg(out, stem, records);
  }
  return paths;
}

}  // namespace pdepot
