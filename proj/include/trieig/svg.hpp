#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace trieig {

// Minimal static line chart.  Rendering is a pure function of the series
// data, so identical inputs produce byte-identical SVG.
struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f6fb2";
  bool markers = false;
};

class LineChart {
 public:
  std::string title, x_label, y_label;
  std::vector<Series> series;

  std::string render(int width = 860, int height = 560) const {
    const int left = 72, right = 24, top = 40, bottom = 56;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
      for (auto [x, y] : s.points) {
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
      }
    }
    if (!(xmin < xmax)) { xmin -= 1.0; xmax += 1.0; }
    if (!(ymin < ymax)) { ymin -= 1.0; ymax += 1.0; }
    const double ypad = 0.04 * (ymax - ymin);
    ymin -= ypad; ymax += ypad;

    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // axes box and ticks
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
    for (double t : ticks(xmin, xmax)) {
      const double px = sx(t);
      out << "<line x1=\"" << px << "\" y1=\"" << top + plot_h << "\" x2=\"" << px
          << "\" y2=\"" << top + plot_h + 5
          << "\" stroke=\"#404040\" stroke-width=\"1\"/>\n"
          << "<text x=\"" << px << "\" y=\"" << top + plot_h + 20
          << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">"
          << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(ymin, ymax)) {
      const double py = sy(t);
      out << "<line x1=\"" << left - 5 << "\" y1=\"" << py << "\" x2=\"" << left
          << "\" y2=\"" << py << "\" stroke=\"#404040\" stroke-width=\"1\"/>\n"
          << "<text x=\"" << left - 8 << "\" y=\"" << py + 4
          << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">"
          << tick_label(t) << "</text>\n";
    }

    if (!title.empty())
      out << "<text x=\"" << width / 2 << "\" y=\"24\" font-size=\"15\" "
             "text-anchor=\"middle\" font-family=\"sans-serif\">"
          << title << "</text>\n";
    if (!x_label.empty())
      out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 14
          << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
          << x_label << "</text>\n";
    if (!y_label.empty())
      out << "<text x=\"18\" y=\"" << top + plot_h / 2
          << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "transform=\"rotate(-90 18 " << top + plot_h / 2 << ")\">"
          << y_label << "</text>\n";

    for (const auto& s : series) {
      if (s.points.empty()) continue;
      out << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"1.5\" points=\"";
      for (auto [x, y] : s.points) out << sx(x) << "," << sy(y) << " ";
      out << "\"/>\n";
      if (s.markers)
        for (auto [x, y] : s.points)
          out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
              << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
    }

    // legend
    int ly = top + 10;
    for (const auto& s : series) {
      if (s.label.empty()) continue;
      out << "<line x1=\"" << left + 12 << "\" y1=\"" << ly << "\" x2=\""
          << left + 34 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
          << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << left + 40 << "\" y=\"" << ly + 4
          << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label
          << "</text>\n";
      ly += 16;
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  static std::vector<double> ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
      if (mag * m >= raw) { step = mag * m; break; }
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step)
      out.push_back(std::fabs(t) < 1e-12 * span ? 0.0 : t);
    return out;
  }

  static std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
  }
};

}  // namespace trieig
