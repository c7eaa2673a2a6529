#pragma once

#include <string>
#include <vector>

namespace aistress {

struct ChartLine {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartLine> lines;
  int width = 720;
  int height = 440;
};

/// Self-contained SVG document: axes, ticks, one polyline per line, legend.
std::string render_svg(const LineChart& chart);

/// Several charts stacked vertically in one document.
std::string render_svg_panels(const std::vector<LineChart>& panels);

}  // namespace aistress
