// Minimal SVG line plots for the CLI artifacts.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace macroq {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  /// Dashed horizontal line, e.g. e_max = 2 for product states.
  std::optional<double> reference_y;
  int width = 720;
  int height = 420;
};

void write_svg(std::ostream& os, const LinePlot& plot);

}  // namespace macroq
