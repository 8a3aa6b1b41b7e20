#pragma once

// Minimal SVG polyline plots for quick visual inspection of runs.
// Output is deterministic; axes are linear with autoscaled ranges.

#include <string>
#include <vector>

namespace adamslab {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Writes a single-panel line plot. Non-finite points break the polyline.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<Series>& series, int width = 720,
                    int height = 480);

}  // namespace adamslab
