#include "tsd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace tsd {

namespace {
constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
}  // namespace

void write_svg(const std::string& path, const LinePlot& plot) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : plot.series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x), xmax = std::max(xmax, x);
            ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double px = kWidth - kLeft - kRight, py = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * px; };
    auto sy = [&](double y) { return kTop + py - (y - ymin) / (ymax - ymin) * py; };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << plot.title << "</text>\n";
    // axes
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + py << "\" x2=\"" << kLeft + px
        << "\" y2=\"" << kTop + py << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + py << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft + px / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">" << plot.x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << kTop + py / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " << kTop + py / 2
        << ")\">" << plot.y_label << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        out << "<text x=\"" << sx(xv) << "\" y=\"" << kTop + py + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << xv << "</text>\n";
        out << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(yv) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << yv << "</text>\n";
    }
    for (std::size_t s = 0; s < plot.series.size(); ++s) {
        const char* color = kPalette[s % (sizeof kPalette / sizeof *kPalette)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : plot.series[s].points) out << sx(x) << ',' << sy(y) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << kLeft + px - 4 << "\" y=\"" << kTop + 16 + 16 * s
            << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">"
            << plot.series[s].name << "</text>\n";
    }
    for (const auto& m : plot.markers) {
        out << "<circle cx=\"" << sx(m.x) << "\" cy=\"" << sy(m.y)
            << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
        out << "<text x=\"" << sx(m.x) << "\" y=\"" << sy(m.y) - 8
            << "\" text-anchor=\"middle\" font-size=\"11\">" << m.label << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace tsd
