// Deterministic SVG line charts: identical input produces byte-identical
// output, with a parallel CSV of the plotted points.

#pragma once

#include <span>
#include <string>
#include <vector>

namespace levfund {

struct ChartPoint {
    double x = 0.0;
    double y = 0.0;
};

struct ChartSeries {
    std::string name;
    std::vector<ChartPoint> points;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 960;
    int height = 540;
};

struct ChartDocument {
    std::string svg;
    std::string points_csv;  // header: series,x,y
};

// One polyline per series. Throws std::invalid_argument when no series is
// given, a series is empty, or a coordinate is not finite.
ChartDocument render_line_chart(std::span<const ChartSeries> series,
                                const ChartOptions& options);

}  // namespace levfund
