#pragma once

#include <string>
#include <vector>

namespace minkflow {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool dashed = false;
    bool markers = false;
};

struct SvgPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
};

/// Polyline chart with axes, tick labels and a legend; panels stack vertically.
std::string render_svg_chart(const std::vector<SvgPanel>& panels);

}  // namespace minkflow
