#ifndef EULERPOLY_FIGURE_HPP
#define EULERPOLY_FIGURE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "eulerpoly/csv.hpp"

namespace eulerpoly {

// Step sizes of the three standard panels.
inline constexpr double kPanelSteps[] = {0.1, 0.05, 0.01};

// Prescribed first slope and clip level shared by every panel.
inline constexpr double kPanelPush = 1.0;
inline constexpr double kPanelClip = 1.0;

// One panel of the three-panel picture: the pushed polygon for a given
// step size on the unit square, clipped at y = 1, plus densely sampled
// reference solutions. The slope of each Euler step is sampled at the
// right abscissa, f(x_j, y_{j-1}).
struct FigurePanel {
    double h = 0;
    PolygonalCurve polygon;
    std::vector<Node> phi1_curve;  // x^2/4 sampled on [0,1]
    std::vector<Node> phi2_curve;  // 3x^2/2 sampled on [0,sqrt(2/3)]
};

FigurePanel make_figure_panel(double h);

// Standalone SVG of one panel: the three sectors shaded light grey, the
// reference solutions in black (x^2/4 dashed, 3x^2/2 solid), the polygon
// in red with node markers, and a red step-size label. Output is
// deterministic byte for byte.
std::string panel_svg(const FigurePanel& panel);

// Writes figure_h<h>_polygon.csv, figure_h<h>_phi1.csv and
// figure_h<h>_phi2.csv into dir; returns the paths written.
std::vector<std::filesystem::path> write_figure_csv(
    const FigurePanel& panel, const std::filesystem::path& dir);

// Writes figure_h<h>.svg into dir; returns the path written.
std::filesystem::path write_figure_svg(const FigurePanel& panel,
                                       const std::filesystem::path& dir);

}  // namespace eulerpoly

#endif
