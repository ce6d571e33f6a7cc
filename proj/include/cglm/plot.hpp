#pragma once

// Self-contained SVG line charts: axes with tick labels, one polyline per
// series, legend.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cglm/data.hpp"

namespace cglm {

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::optional<std::pair<double, double>> x_range;
  std::optional<std::pair<double, double>> y_range;
  int width = 800;
  int height = 500;
};

// Throws ContractError on empty series, mismatched x/y lengths, or
// non-positive values on a log axis.
std::string render_line_chart(const std::vector<LineSeries>& series, const ChartOptions& opts);

struct PlotInput {
  std::filesystem::path csv;
  std::string label;
};

struct PlotSpec {
  std::vector<PlotInput> series;
  Split split = Split::val;
  std::string title;
  std::optional<std::pair<double, double>> x_range;
  std::optional<std::pair<double, double>> y_range;
};

// One polyline per input CSV, filtered to spec.split. A file with no rows
// for that split is a DataError naming the file.
std::string render_loss_svg(const PlotSpec& spec);
void write_loss_svg(const std::filesystem::path& out, const PlotSpec& spec);

std::string xml_escape(std::string_view s);

}  // namespace cglm
