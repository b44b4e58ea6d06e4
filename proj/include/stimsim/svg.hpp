#pragma once

#include <string>
#include <vector>

namespace stimsim {

// Static SVG 1.1 line chart: polylines over an auto-scaled frame with
// min/max tick labels and a legend. A convenience view of the CSV data,
// not a test surface.
class SvgChart {
public:
    SvgChart(std::string title, std::string x_label, std::string y_label);
    void add_series(std::string name, const std::vector<double>& x,
                    const std::vector<double>& y);
    std::string render() const;
    void write(const std::string& path) const;

private:
    struct Series {
        std::string name;
        std::vector<double> x, y;
    };
    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

} // namespace stimsim
