#include "adamslab/svg_plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace adamslab {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<Series>& series, int width, int height) {
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("write_svg_plot: x/y size mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!(xmin <= xmax)) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (!(ymin <= ymax)) {
    ymin = 0.0;
    ymax = 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  const double ml = 60, mr = 20, mt = 36, mb = 40;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_svg_plot: cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n"
      << "<rect x=\"" << num(ml) << "\" y=\"" << num(mt) << "\" width=\""
      << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double x = xmin + (xmax - xmin) * t / 4.0;
    const double y = ymin + (ymax - ymin) * t / 4.0;
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"monospace\" "
        << "font-size=\"11\">" << num(x) << "</text>\n"
        << "<text x=\"" << num(ml - 6) << "\" y=\"" << num(py(y) + 4)
        << "\" text-anchor=\"end\" font-family=\"monospace\" "
        << "font-size=\"11\">" << num(y) << "</text>\n";
  }
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % 8];
    std::string pts;
    auto flush = [&]() {
      if (!pts.empty())
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      pts += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
    }
    flush();
    out << "<text x=\"" << num(ml + 8) << "\" y=\"" << num(mt + 16 + 14 * si)
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << color
        << "\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write_svg_plot: write failed " + path);
}

}  // namespace adamslab
