#pragma once

#include <string>
#include <vector>

namespace cryoeo {

// One curve of a quick-look plot.
struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f6fb4";
  bool dashed = false;
  std::string label;
};

// Write a minimal standalone SVG line plot: axes, a handful of ticks and
// the given polylines.  Meant for quick inspection of run output, not for
// publication graphics.
void write_svg_plot(const std::string& path,
                    const std::vector<SvgSeries>& series,
                    const std::string& x_label, const std::string& y_label,
                    const std::string& title);

}  // namespace cryoeo
