#include "minkflow/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <locale>
#include <sstream>

namespace minkflow {

namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 360.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

std::string num(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(6) << v;
    return os.str();
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

void render_panel(std::ostringstream& os, const SvgPanel& panel, double y0) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : panel.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kPanelHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return y0 + kTop + (1.0 - (y - ymin) / (ymax - ymin)) * plot_h; };

    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(y0 + 24) << "\" text-anchor=\"middle\" font-size=\"16\">"
       << escape(panel.title) << "</text>\n";
    os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(y0 + kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
       << num(plot_h) << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int k = 0; k <= kTicks; ++k) {
        const double xv = xmin + (xmax - xmin) * k / kTicks;
        const double yv = ymin + (ymax - ymin) * k / kTicks;
        os << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(y0 + kTop + plot_h + 18)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << num(xv) << "</text>\n";
        os << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(yv) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << num(yv) << "</text>\n";
    }
    if (ymin < 0.0 && ymax > 0.0) {
        os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(kLeft + plot_w)
           << "\" y2=\"" << num(py(0)) << "\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
    }
    os << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(y0 + kPanelHeight - 10)
       << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(panel.x_label) << "</text>\n";
    os << "<text x=\"16\" y=\"" << num(y0 + kTop + plot_h / 2) << "\" text-anchor=\"middle\" font-size=\"12\" "
       << "transform=\"rotate(-90 16 " << num(y0 + kTop + plot_h / 2) << ")\">" << escape(panel.y_label)
       << "</text>\n";

    for (std::size_t n = 0; n < panel.series.size(); ++n) {
        const auto& s = panel.series[n];
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\"";
        if (s.dashed) os << " stroke-dasharray=\"6,4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            os << num(px(s.x[i])) << ',' << num(py(s.y[i])) << ' ';
        }
        os << "\"/>\n";
        if (s.markers) {
            for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"2.5\" fill=\""
                   << s.color << "\"/>\n";
            }
        }
        const double ly = y0 + kTop + 14 + 18.0 * static_cast<double>(n);
        const double lx = kLeft + plot_w + 12;
        os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\"" << num(ly)
           << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"6,4\"" : "")
           << "/>\n";
        os << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\" font-size=\"11\">" << escape(s.label)
           << "</text>\n";
    }
}

}  // namespace

std::string render_svg_chart(const std::vector<SvgPanel>& panels) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    const double height = kPanelHeight * static_cast<double>(std::max<std::size_t>(1, panels.size()));
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height) << "\" font-family=\"sans-serif\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) render_panel(os, panels[i], kPanelHeight * static_cast<double>(i));
    os << "</svg>\n";
    return os.str();
}

}  // namespace minkflow
