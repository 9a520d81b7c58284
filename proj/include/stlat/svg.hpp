#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stlat/solver.hpp"

namespace stlat {

namespace detail {

struct PlotFrame {
  double x0, x1, y0, y1;       // data ranges
  double px0, px1, py0, py1;   // pixel box (py0 = top)

  double px(double x) const {
    return px0 + (x - x0) / (x1 - x0) * (px1 - px0);
  }
  double py(double y) const {
    return py0 + (y1 - y) / (y1 - y0) * (py1 - py0);
  }
};

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string polyline(const std::vector<std::pair<double, double>> &pts,
                            const PlotFrame &f, const std::string &color) {
  std::string s = "<polyline fill=\"none\" stroke=\"" + color +
                  "\" stroke-width=\"1.5\" points=\"";
  for (const auto &[x, y] : pts)
    s += svg_num(f.px(x)) + ',' + svg_num(f.py(y)) + ' ';
  s += "\"/>\n";
  return s;
}

} // namespace detail

/// Static two-branch dispersion diagram: the numerical pair along the scan,
/// with the numerically forbidden interval (between the upper envelope of
/// the lower branch and the lower envelope of the upper branch) shaded.
inline std::string render_band_svg(const BandTable &table) {
  const int W = 720, H = 480;
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(W) + "\" height=\"" + std::to_string(H) + "\">\n" +
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (table.rows.empty())
    return svg + "</svg>\n";

  std::vector<std::pair<double, double>> lower, upper;
  double xmin = table.rows.front().coordinate_ev, xmax = xmin;
  double ymin = table.rows.front().s_lower_ev, ymax = ymin;
  double forbid_lo = -1e300, forbid_hi = 1e300;
  for (const auto &r : table.rows) {
    lower.push_back({r.coordinate_ev, r.s_lower_ev});
    upper.push_back({r.coordinate_ev, r.s_upper_ev});
    xmin = std::min(xmin, r.coordinate_ev);
    xmax = std::max(xmax, r.coordinate_ev);
    ymin = std::min(ymin, r.s_lower_ev);
    ymax = std::max(ymax, r.s_upper_ev);
    forbid_lo = std::max(forbid_lo, r.s_lower_ev);
    forbid_hi = std::min(forbid_hi, r.s_upper_ev);
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double pad = 0.05 * (ymax - ymin);
  detail::PlotFrame f{xmin, xmax, ymin - pad, ymax + pad,
                      70.0, W - 20.0, 20.0, H - 50.0};

  // frame and ticks
  svg += "<rect x=\"" + detail::svg_num(f.px0) + "\" y=\"" +
         detail::svg_num(f.py0) + "\" width=\"" +
         detail::svg_num(f.px1 - f.px0) + "\" height=\"" +
         detail::svg_num(f.py1 - f.py0) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = xmin + i * (xmax - xmin) / 4.0;
    const double y = f.y0 + i * (f.y1 - f.y0) / 4.0;
    char label[48];
    svg += "<line x1=\"" + detail::svg_num(f.px(x)) + "\" y1=\"" +
           detail::svg_num(f.py1) + "\" x2=\"" + detail::svg_num(f.px(x)) +
           "\" y2=\"" + detail::svg_num(f.py1 + 5) +
           "\" stroke=\"black\"/>\n";
    std::snprintf(label, sizeof(label), "%.6g", x);
    svg += "<text x=\"" + detail::svg_num(f.px(x)) + "\" y=\"" +
           detail::svg_num(f.py1 + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + label +
           "</text>\n";
    svg += "<line x1=\"" + detail::svg_num(f.px0 - 5) + "\" y1=\"" +
           detail::svg_num(f.py(y)) + "\" x2=\"" + detail::svg_num(f.px0) +
           "\" y2=\"" + detail::svg_num(f.py(y)) + "\" stroke=\"black\"/>\n";
    std::snprintf(label, sizeof(label), "%.8g", y);
    svg += "<text x=\"" + detail::svg_num(f.px0 - 8) + "\" y=\"" +
           detail::svg_num(f.py(y) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + label + "</text>\n";
  }

  if (forbid_hi > forbid_lo) {
    svg += "<rect x=\"" + detail::svg_num(f.px0) + "\" y=\"" +
           detail::svg_num(f.py(forbid_hi)) + "\" width=\"" +
           detail::svg_num(f.px1 - f.px0) + "\" height=\"" +
           detail::svg_num(f.py(forbid_lo) - f.py(forbid_hi)) +
           "\" fill=\"#fce5e5\"/>\n";
  }
  svg += detail::polyline(lower, f, "#1f77b4");
  svg += detail::polyline(upper, f, "#d62728");
  svg += "<text x=\"" + detail::svg_num((f.px0 + f.px1) / 2) + "\" y=\"" +
         detail::svg_num(H - 10.0) +
         "\" font-size=\"12\" text-anchor=\"middle\">scan coordinate (eV)"
         "</text>\n";
  svg += "<text x=\"14\" y=\"" + detail::svg_num((f.py0 + f.py1) / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "14 " +
         detail::svg_num((f.py0 + f.py1) / 2) +
         ")\">Stueckelberg eigenvalue (eV)</text>\n";
  svg += "</svg>\n";
  return svg;
}

} // namespace stlat
