#include "aistress/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aistress/csv.hpp"

namespace aistress {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string num(double v) { return fmt_sig(std::round(v * 100.0) / 100.0, 8); }

// Tick step of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

std::string panel(const LineChart& c, double y_offset) {
  const double left = 70, right = 170, top = 40, bottom = 50;
  const double w = c.width - left - right;
  const double h = c.height - top - bottom;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& l : c.lines)
    for (std::size_t i = 0; i < std::min(l.x.size(), l.y.size()); ++i) {
      if (!std::isfinite(l.x[i]) || !std::isfinite(l.y[i])) continue;
      xmin = std::min(xmin, l.x[i]);
      xmax = std::max(xmax, l.x[i]);
      ymin = std::min(ymin, l.y[i]);
      ymax = std::max(ymax, l.y[i]);
    }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
  const double ystep = nice_step(ymax - ymin, 5);
  ymin = std::floor(ymin / ystep) * ystep;
  ymax = std::ceil(ymax / ystep) * ystep;
  const double xstep = nice_step(xmax - xmin, 6);

  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * w; };
  auto py = [&](double y) { return y_offset + top + (1.0 - (y - ymin) / (ymax - ymin)) * h; };

  std::string s;
  s += "<text x=\"" + num(left + w / 2) + "\" y=\"" + num(y_offset + 24) +
       "\" text-anchor=\"middle\" font-size=\"15\">" + escape(c.title) + "</text>\n";
  s += "<rect x=\"" + num(left) + "\" y=\"" + num(y_offset + top) + "\" width=\"" + num(w) +
       "\" height=\"" + num(h) + "\" fill=\"none\" stroke=\"#333\"/>\n";

  for (double v = ymin; v <= ymax + ystep * 1e-6; v += ystep) {
    s += "<line x1=\"" + num(left) + "\" y1=\"" + num(py(v)) + "\" x2=\"" + num(left + w) + "\" y2=\"" +
         num(py(v)) + "\" stroke=\"#ddd\"/>\n";
    s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(v) + 4) +
         "\" text-anchor=\"end\" font-size=\"11\">" + fmt_sig(std::abs(v) < ystep * 1e-9 ? 0.0 : v, 6) +
         "</text>\n";
  }
  for (double v = std::ceil(xmin / xstep) * xstep; v <= xmax + xstep * 1e-6; v += xstep) {
    s += "<line x1=\"" + num(px(v)) + "\" y1=\"" + num(y_offset + top + h) + "\" x2=\"" + num(px(v)) +
         "\" y2=\"" + num(y_offset + top + h + 5) + "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(px(v)) + "\" y=\"" + num(y_offset + top + h + 18) +
         "\" text-anchor=\"middle\" font-size=\"11\">" + fmt_sig(std::abs(v) < xstep * 1e-9 ? 0.0 : v, 6) +
         "</text>\n";
  }
  s += "<text x=\"" + num(left + w / 2) + "\" y=\"" + num(y_offset + c.height - 10) +
       "\" text-anchor=\"middle\" font-size=\"12\">" + escape(c.x_label) + "</text>\n";
  s += "<text transform=\"translate(" + num(18) + "," + num(y_offset + top + h / 2) +
       ") rotate(-90)\" text-anchor=\"middle\" font-size=\"12\">" + escape(c.y_label) + "</text>\n";

  for (std::size_t li = 0; li < c.lines.size(); ++li) {
    const auto& l = c.lines[li];
    const char* color = kPalette[li % std::size(kPalette)];
    std::string pts;
    // thin to at most ~600 vertices
    const std::size_t n = std::min(l.x.size(), l.y.size());
    const std::size_t stride = std::max<std::size_t>(1, n / 600);
    for (std::size_t i = 0; i < n; i += stride) {
      if (i + stride >= n) i = n - 1;
      if (!std::isfinite(l.y[i])) continue;
      pts += num(px(l.x[i])) + "," + num(py(l.y[i])) + " ";
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.8\" points=\"" +
         pts + "\"/>\n";
    const double ly = y_offset + top + 14 + 18.0 * li;
    s += "<line x1=\"" + num(left + w + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(left + w + 32) +
         "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + num(left + w + 38) + "\" y=\"" + num(ly + 4) + "\" font-size=\"11\">" +
         escape(l.label) + "</text>\n";
  }
  return s;
}

}  // namespace

std::string render_svg(const LineChart& chart) { return render_svg_panels({chart}); }

std::string render_svg_panels(const std::vector<LineChart>& panels) {
  int width = 0, height = 0;
  for (const auto& p : panels) {
    std::size_t longest = 0;
    for (const auto& l : p.lines) longest = std::max(longest, l.label.size());
    width = std::max(width, p.width + std::max(0, static_cast<int>(6.5 * static_cast<double>(longest)) - 120));
    height += p.height;
  }
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
       std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
       std::to_string(height) + "\" font-family=\"sans-serif\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double offset = 0;
  for (const auto& p : panels) {
    s += panel(p, offset);
    offset += p.height;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace aistress
