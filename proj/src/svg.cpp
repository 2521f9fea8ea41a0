#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "errors.hpp"

namespace cryoeo {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finalize() {
    if (!(hi >= lo)) {  // nothing finite seen
      lo = 0.0;
      hi = 1.0;
    }
    if (hi == lo) {
      const double pad = hi == 0.0 ? 1.0 : std::abs(hi) * 0.1;
      lo -= pad;
      hi += pad;
    } else {
      const double pad = 0.05 * (hi - lo);
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

void write_svg_plot(const std::string& path,
                    const std::vector<SvgSeries>& series,
                    const std::string& x_label, const std::string& y_label,
                    const std::string& title) {
  Range rx, ry;
  for (const auto& s : series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (std::isfinite(s.x[k]) && std::isfinite(s.y[k])) {
        rx.include(s.x[k]);
        ry.include(s.y[k]);
      }
    }
  }
  rx.finalize();
  ry.finalize();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) {
    return kLeft + (x - rx.lo) / (rx.hi - rx.lo) * plot_w;
  };
  auto py = [&](double y) {
    return kTop + plot_h - (y - ry.lo) / (ry.hi - ry.lo) * plot_h;
  };

  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) raise(ErrorCode::IoError, "svg", "cannot open " + path);
  std::fprintf(f,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" "
               "height=\"%g\" viewBox=\"0 0 %g %g\">\n",
               kWidth, kHeight, kWidth, kHeight);
  std::fprintf(f,
               "<rect width=\"%g\" height=\"%g\" fill=\"white\"/>\n", kWidth,
               kHeight);
  std::fprintf(f,
               "<text x=\"%g\" y=\"22\" font-family=\"sans-serif\" "
               "font-size=\"15\" text-anchor=\"middle\">%s</text>\n",
               kLeft + plot_w / 2.0, title.c_str());

  // Frame and ticks.
  std::fprintf(f,
               "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" "
               "fill=\"none\" stroke=\"black\"/>\n",
               kLeft, kTop, plot_w, plot_h);
  const int ticks = 5;
  for (int k = 0; k <= ticks; ++k) {
    const double fx = rx.lo + (rx.hi - rx.lo) * k / ticks;
    const double fy = ry.lo + (ry.hi - ry.lo) * k / ticks;
    const double X = px(fx), Y = py(fy);
    std::fprintf(f,
                 "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                 "stroke=\"black\"/>\n",
                 X, kTop + plot_h, X, kTop + plot_h + 5.0);
    std::fprintf(f,
                 "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" "
                 "font-size=\"11\" text-anchor=\"middle\">%.3g</text>\n",
                 X, kTop + plot_h + 18.0, fx);
    std::fprintf(f,
                 "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                 "stroke=\"black\"/>\n",
                 kLeft - 5.0, Y, kLeft, Y);
    std::fprintf(f,
                 "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" "
                 "font-size=\"11\" text-anchor=\"end\">%.3g</text>\n",
                 kLeft - 8.0, Y + 4.0, fy);
  }
  std::fprintf(f,
               "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" "
               "font-size=\"13\" text-anchor=\"middle\">%s</text>\n",
               kLeft + plot_w / 2.0, kHeight - 10.0, x_label.c_str());
  std::fprintf(f,
               "<text x=\"16\" y=\"%g\" font-family=\"sans-serif\" "
               "font-size=\"13\" text-anchor=\"middle\" "
               "transform=\"rotate(-90 16 %g)\">%s</text>\n",
               kTop + plot_h / 2.0, kTop + plot_h / 2.0, y_label.c_str());

  // Curves; breaks at non-finite samples split the polyline.
  double legend_y = kTop + 16.0;
  for (const auto& s : series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    std::string points;
    auto flush = [&]() {
      if (points.empty()) return;
      std::fprintf(f,
                   "<polyline fill=\"none\" stroke=\"%s\" "
                   "stroke-width=\"1.6\"%s points=\"%s\"/>\n",
                   s.color.c_str(),
                   s.dashed ? " stroke-dasharray=\"6 4\"" : "",
                   points.c_str());
      points.clear();
    };
    for (std::size_t k = 0; k < n; ++k) {
      if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) {
        flush();
        continue;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(s.x[k]), py(s.y[k]));
      points += buf;
    }
    flush();
    if (!s.label.empty()) {
      std::fprintf(f,
                   "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                   "stroke=\"%s\" stroke-width=\"1.6\"%s/>\n",
                   kLeft + plot_w - 120.0, legend_y, kLeft + plot_w - 96.0,
                   legend_y, s.color.c_str(),
                   s.dashed ? " stroke-dasharray=\"6 4\"" : "");
      std::fprintf(f,
                   "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" "
                   "font-size=\"11\">%s</text>\n",
                   kLeft + plot_w - 90.0, legend_y + 4.0, s.label.c_str());
      legend_y += 16.0;
    }
  }
  std::fprintf(f, "</svg>\n");
  std::fclose(f);
}

}  // namespace cryoeo
