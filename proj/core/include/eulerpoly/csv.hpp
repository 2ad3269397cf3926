#ifndef EULERPOLY_CSV_HPP
#define EULERPOLY_CSV_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "eulerpoly/analysis.hpp"

namespace eulerpoly {

// Shortest decimal string that parses back to exactly the same binary64.
std::string format_double(double v);

// All builders return complete CSV documents: a header row, then one
// data row per entry, LF line endings, a trailing newline.

// Header "x,y".
std::string nodes_csv(std::span<const Node> nodes);
std::string curve_csv(const PolygonalCurve& curve);

// Header "x,estimate,analytic"; the third field is empty when the field
// declares no analytic constant.
std::string lipschitz_csv(std::span<const LipschitzEstimate> estimates);

// Header "x,quotient". xs and quotients must have equal length.
std::string witness_csv(std::span<const double> xs,
                        std::span<const double> quotients);

// Header "h,dist_phi1,dist_phi2".
std::string convergence_csv(const ConvergenceReport& report);

// Header "x,residual". xs and residuals must have equal length.
std::string residual_csv(std::span<const double> xs,
                         std::span<const double> residuals);

// Writes through a sibling temporary file renamed into place, so a
// failed write never leaves a partial file at the target path. Throws
// std::filesystem::filesystem_error on failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace eulerpoly

#endif
