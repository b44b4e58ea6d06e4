#include "stimsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "stimsim/csv.hpp"

namespace stimsim {

namespace {

constexpr double width = 840.0, height = 520.0;
constexpr double ml = 70.0, mr = 160.0, mt = 40.0, mb = 50.0;

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

SvgChart::SvgChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgChart::add_series(std::string name, const std::vector<double>& x,
                          const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("SvgChart: series '" + name + "' has bad sample counts");
    series_.push_back({std::move(name), x, y});
}

std::string SvgChart::render() const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    }
    if (series_.empty()) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double pad = 0.04 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title_ + "</text>\n";

    // Frame and zero line
    svg += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#333\"/>\n";
    if (ymin < 0.0 && ymax > 0.0)
        svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(ml + pw) +
               "\" y2=\"" + num(py(0)) + "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";

    // Axis extremes and labels
    auto tick = [&](double x, double y, const std::string& text, const char* anchor) {
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + text + "</text>\n";
    };
    tick(ml, height - mb + 16, num(xmin), "middle");
    tick(ml + pw, height - mb + 16, num(xmax), "middle");
    tick(ml - 6, mt + ph + 4, num(ymin + pad), "end");
    tick(ml - 6, mt + 10, num(ymax - pad), "end");
    tick(ml + pw / 2, height - 12, x_label_, "middle");
    svg += "<text x=\"16\" y=\"" + num(mt + ph / 2) + "\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
           num(mt + ph / 2) + ")\">" + y_label_ + "</text>\n";

    for (std::size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        const char* color = palette[si % (sizeof palette / sizeof palette[0])];
        // Thin long polylines: sample at most ~2000 points per series.
        const std::size_t stride = std::max<std::size_t>(1, s.x.size() / 2000);
        std::string pts;
        for (std::size_t i = 0; i < s.x.size(); i += stride) {
            pts += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
        }
        if ((s.x.size() - 1) % stride != 0)
            pts += num(px(s.x.back())) + "," + num(py(s.y.back()));
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.4\" points=\"" + pts + "\"/>\n";
        const double ly = mt + 16.0 + 18.0 * static_cast<double>(si);
        svg += "<line x1=\"" + num(width - mr + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
               num(width - mr + 36) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(width - mr + 42) + "\" y=\"" + num(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void SvgChart::write(const std::string& path) const { write_file(path, render()); }

} // namespace stimsim
