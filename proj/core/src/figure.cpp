#include "eulerpoly/figure.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerpoly {

namespace {

namespace fs = std::filesystem;

constexpr double kSampleStep = 0.005;
constexpr double kCanvas = 480;
constexpr double kMargin = 20;
constexpr double kPlotSide = kCanvas - 2 * kMargin;

double px(double u) { return kMargin + u * kPlotSide; }
double py(double v) { return kMargin + (1 - v) * kPlotSide; }

std::vector<Node> sample_solution(const ClosedFormSolution& sol, double lo,
                                  double hi) {
    std::vector<Node> out;
    const int n = static_cast<int>(std::floor((hi - lo) / kSampleStep + 1e-9));
    out.reserve(static_cast<std::size_t>(n) + 2);
    for (int j = 0; j <= n; ++j) {
        const double x = lo + j * kSampleStep;
        out.push_back({x, sol.value(x)});
    }
    if (out.back().x < hi) out.push_back({hi, sol.value(hi)});
    return out;
}

std::string points_attr(std::span<const Node> pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += format_double(px(pts[i].x));
        out += ',';
        out += format_double(py(pts[i].y));
    }
    return out;
}

// Closed path of the band lo(x) <= y <= hi(x) over the unit interval.
std::string band_path(double (*lo)(double), double (*hi)(double)) {
    constexpr int n = 200;
    std::string d;
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        d += i == 0 ? "M" : " L";
        d += format_double(px(x));
        d += ' ';
        d += format_double(py(lo(x)));
    }
    for (int i = n; i >= 0; --i) {
        const double x = static_cast<double>(i) / n;
        d += " L";
        d += format_double(px(x));
        d += ' ';
        d += format_double(py(hi(x)));
    }
    d += " Z";
    return d;
}

std::string file_stem(double h) { return "figure_h" + format_double(h); }

}  // namespace

FigurePanel make_figure_panel(double h) {
    if (!(h > 0) || !(h <= 1))
        throw std::invalid_argument("make_figure_panel: h must be in (0, 1]");
    const int steps = static_cast<int>(std::lround(1.0 / h));
    const IntegrationSpec spec{counterexample_rhs(), 0,     0,         h,
                               steps,                kPanelPush, SlopeAt::Right};
    FigurePanel panel;
    panel.h = h;
    panel.polygon = emit_clipped(push_euler(spec), kPanelClip);
    panel.phi1_curve = sample_solution(phi1_on_quadrant(), 0, 1);
    panel.phi2_curve =
        sample_solution(phi2_on_quadrant(), 0, std::sqrt(2.0 / 3.0));
    return panel;
}

std::string panel_svg(const FigurePanel& panel) {
    std::string s;
    s +=
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" "
        "height=\"480\" viewBox=\"0 0 480 480\">\n";
    s += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";

    // Sector shading, darkest at the bottom.
    s += "<path d=\"" +
         band_path([](double) { return 0.0; },
                   [](double x) { return x * x / 2; }) +
         "\" fill=\"#d9d9d9\"/>\n";
    s += "<path d=\"" +
         band_path([](double x) { return x * x / 2; },
                   [](double x) { return x * x; }) +
         "\" fill=\"#e6e6e6\"/>\n";
    s += "<path d=\"" +
         band_path([](double x) { return x * x; },
                   [](double) { return 1.0; }) +
         "\" fill=\"#f2f2f2\"/>\n";

    // Reference solutions: x^2/4 dashed, 3x^2/2 solid.
    s += "<polyline points=\"" + points_attr(panel.phi1_curve) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 4\"/>\n";
    s += "<polyline points=\"" + points_attr(panel.phi2_curve) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    // The polygon and its nodes.
    s += "<polyline points=\"" + points_attr(panel.polygon.nodes) +
         "\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
    for (const Node& n : panel.polygon.nodes)
        s += "<circle cx=\"" + format_double(px(n.x)) + "\" cy=\"" +
             format_double(py(n.y)) + "\" r=\"3\" fill=\"red\"/>\n";

    s += "<text x=\"" + format_double(px(0.25)) + "\" y=\"" +
         format_double(py(0.85)) +
         "\" fill=\"red\" font-family=\"sans-serif\" font-size=\"18\">h = " +
         format_double(panel.h) + "</text>\n";
    s += "</svg>\n";
    return s;
}

std::vector<fs::path> write_figure_csv(const FigurePanel& panel,
                                       const fs::path& dir) {
    const std::string stem = file_stem(panel.h);
    std::vector<fs::path> written;
    written.push_back(dir / (stem + "_polygon.csv"));
    write_file_atomic(written.back(), curve_csv(panel.polygon));
    written.push_back(dir / (stem + "_phi1.csv"));
    write_file_atomic(written.back(), nodes_csv(panel.phi1_curve));
    written.push_back(dir / (stem + "_phi2.csv"));
    write_file_atomic(written.back(), nodes_csv(panel.phi2_curve));
    return written;
}

fs::path write_figure_svg(const FigurePanel& panel, const fs::path& dir) {
    const fs::path path = dir / (file_stem(panel.h) + ".svg");
    write_file_atomic(path, panel_svg(panel));
    return path;
}

}  // namespace eulerpoly
