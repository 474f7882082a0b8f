#pragma once

#include <string>
#include <vector>

namespace tsd {

/// Minimal SVG line-plot emitter (no plotting dependency; artifacts are
/// consumed post hoc).
struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct PlotMarker {
    double x = 0.0, y = 0.0;
    std::string label;
};

struct LinePlot {
    std::string title, x_label, y_label;
    std::vector<PlotSeries> series;
    std::vector<PlotMarker> markers;
};

void write_svg(const std::string& path, const LinePlot& plot);

}  // namespace tsd
