#include "levfund/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "levfund/csv.hpp"

namespace levfund {

namespace {

constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 42;
constexpr int kMarginBottom = 54;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

// Pads a degenerate range so that a flat series still renders mid-chart.
Range padded(double lo, double hi) {
    if (lo == hi) {
        const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
        return Range{lo - pad, hi + pad};
    }
    return Range{lo, hi};
}

// Tick step of the form {1,2,5} * 10^k giving roughly `target` divisions.
double nice_step(const Range& r, int target) {
    const double raw = (r.hi - r.lo) / target;
    if (!(raw > 0.0) || !std::isfinite(raw)) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double mantissa = raw / mag;
    double step;
    if (mantissa <= 1.0) step = 1.0;
    else if (mantissa <= 2.0) step = 2.0;
    else if (mantissa <= 5.0) step = 5.0;
    else step = 10.0;
    return step * mag;
}

std::string fixed(double v, int decimals) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

ChartDocument render_line_chart(std::span<const ChartSeries> series,
                                const ChartOptions& options) {
    if (series.empty()) throw std::invalid_argument("chart needs at least one series");
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const ChartSeries& s : series) {
        if (s.points.empty()) {
            throw std::invalid_argument("chart series '" + s.name + "' is empty");
        }
        for (const ChartPoint& p : s.points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw std::invalid_argument("non-finite point in series '" + s.name + "'");
            }
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
    }
    const Range xr = padded(x_min, x_max);
    const Range yr = padded(y_min, y_max);

    const double plot_w = options.width - kMarginLeft - kMarginRight;
    const double plot_h = options.height - kMarginTop - kMarginBottom;
    const auto to_px_x = [&](double x) {
        return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    const auto to_px_y = [&](double y) {
        return kMarginTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(options.width) + "\" height=\"" +
           std::to_string(options.height) + "\" viewBox=\"0 0 " +
           std::to_string(options.width) + " " + std::to_string(options.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg += "<text x=\"" + fixed(options.width / 2.0, 1) +
               "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" + escape_xml(options.title) + "</text>\n";
    }

    // Gridlines and tick labels.
    const double x_step = nice_step(xr, 6);
    const double y_step = nice_step(yr, 5);
    for (double t = std::ceil(xr.lo / x_step) * x_step; t <= xr.hi + 1e-12 * x_step;
         t += x_step) {
        const std::string px = fixed(to_px_x(t), 2);
        svg += "<line x1=\"" + px + "\" y1=\"" + std::to_string(kMarginTop) +
               "\" x2=\"" + px + "\" y2=\"" +
               std::to_string(options.height - kMarginBottom) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + px + "\" y=\"" +
               std::to_string(options.height - kMarginBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(t) + "</text>\n";
    }
    for (double t = std::ceil(yr.lo / y_step) * y_step; t <= yr.hi + 1e-12 * y_step;
         t += y_step) {
        const std::string py = fixed(to_px_y(t), 2);
        svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + py +
               "\" x2=\"" + std::to_string(options.width - kMarginRight) +
               "\" y2=\"" + py + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + std::to_string(kMarginLeft - 6) + "\" y=\"" +
               fixed(to_px_y(t) + 4, 2) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(t) + "</text>\n";
    }

    // Axes.
    svg += "<rect x=\"" + std::to_string(kMarginLeft) + "\" y=\"" +
           std::to_string(kMarginTop) + "\" width=\"" + fixed(plot_w, 1) +
           "\" height=\"" + fixed(plot_h, 1) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    if (!options.x_label.empty()) {
        svg += "<text x=\"" + fixed(kMarginLeft + plot_w / 2.0, 1) + "\" y=\"" +
               std::to_string(options.height - 12) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
               escape_xml(options.x_label) + "</text>\n";
    }
    if (!options.y_label.empty()) {
        svg += "<text x=\"18\" y=\"" + fixed(kMarginTop + plot_h / 2.0, 1) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
               "transform=\"rotate(-90 18 " + fixed(kMarginTop + plot_h / 2.0, 1) +
               ")\">" + escape_xml(options.y_label) + "</text>\n";
    }

    // Data polylines.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % kPaletteSize];
        std::string pts;
        for (const ChartPoint& p : series[i].points) {
            if (!pts.empty()) pts += ' ';
            pts += fixed(to_px_x(p.x), 2) + "," + fixed(to_px_y(p.y), 2);
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    }

    // Legend.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % kPaletteSize];
        const int y = kMarginTop + 8 + int(i) * 16;
        svg += "<line x1=\"" + std::to_string(kMarginLeft + 10) + "\" y1=\"" +
               std::to_string(y) + "\" x2=\"" + std::to_string(kMarginLeft + 34) +
               "\" y2=\"" + std::to_string(y) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + std::to_string(kMarginLeft + 40) + "\" y=\"" +
               std::to_string(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_xml(series[i].name) + "</text>\n";
    }
    svg += "</svg>\n";

    std::string csv = "series,x,y\n";
    for (const ChartSeries& s : series) {
        for (const ChartPoint& p : s.points) {
            csv += s.name + "," + format_double(p.x) + "," + format_double(p.y) + "\n";
        }
    }
    return ChartDocument{std::move(svg), std::move(csv)};
}

}  // namespace levfund
