#include "macroq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "macroq/format.hpp"

namespace macroq {

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving about five ticks over the span.
double tick_step(double span) {
  if (!(span > 0.0)) return 1.0;
  const double raw = span / 5.0;
  const double p = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / p;
  return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * p;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (lo > hi) {
      lo = 0.0;
      hi = 1.0;
    } else if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

void write_svg(std::ostream& os, const LinePlot& plot) {
  const ClassicLocaleGuard classic(os);
  const double left = 70, right = 20, top = 40, bottom = 55;
  const double pw = plot.width - left - right;
  const double ph = plot.height - top - bottom;

  Range xr, yr;
  for (const auto& s : plot.series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  if (plot.reference_y) yr.add(*plot.reference_y);
  xr.finish();
  yr.finish();
  const double ypad = 0.05 * (yr.hi - yr.lo);
  yr.lo -= ypad;
  yr.hi += ypad;

  auto sx = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double v) { return top + (yr.hi - v) / (yr.hi - yr.lo) * ph; };
  auto num = [](double v) { return format_number(v, 6); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\""
     << plot.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << plot.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
     << escape(plot.title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = tick_step(xr.hi - xr.lo);
  for (double t = std::ceil(xr.lo / xs) * xs; t <= xr.hi + 1e-9 * xs; t += xs) {
    const double px = sx(t);
    os << "<line x1=\"" << num(px) << "\" y1=\"" << top + ph << "\" x2=\"" << num(px) << "\" y2=\""
       << top + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(px) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
       << num(std::abs(t) < 1e-12 * xs ? 0.0 : t) << "</text>\n";
  }
  const double ys = tick_step(yr.hi - yr.lo);
  for (double t = std::ceil(yr.lo / ys) * ys; t <= yr.hi + 1e-9 * ys; t += ys) {
    const double py = sy(t);
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << num(py) << "\" x2=\"" << left << "\" y2=\""
       << num(py) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">"
       << num(std::abs(t) < 1e-12 * ys ? 0.0 : t) << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << plot.height - 12
     << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  os << "<text transform=\"translate(16," << top + ph / 2
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(plot.y_label) << "</text>\n";

  if (plot.reference_y) {
    const double py = sy(*plot.reference_y);
    os << "<line x1=\"" << left << "\" y1=\"" << num(py) << "\" x2=\"" << left + pw << "\" y2=\""
       << num(py) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  }

  std::size_t ci = 0;
  for (const auto& s : plot.series) {
    const char* color = kColors[ci++ % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i) os << ' ';
      os << num(sx(s.x[i])) << ',' << num(sy(s.y[i]));
    }
    os << "\"/>\n";
    if (s.markers) {
      for (std::size_t i = 0; i < n; ++i) {
        os << "<circle cx=\"" << num(sx(s.x[i])) << "\" cy=\"" << num(sy(s.y[i]))
           << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      }
    }
  }

  // Legend, top-left inside the frame.
  double ly = top + 16;
  ci = 0;
  for (const auto& s : plot.series) {
    const char* color = kColors[ci++ % std::size(kColors)];
    if (s.label.empty()) continue;
    os << "<line x1=\"" << left + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + 30 << "\" y2=\""
       << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + 36 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
}

}  // namespace macroq
