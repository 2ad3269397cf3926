#ifndef EULERPOLY_ANALYSIS_HPP
#define EULERPOLY_ANALYSIS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulerpoly/integrate.hpp"
#include "eulerpoly/solutions.hpp"

namespace eulerpoly {

// Largest difference quotient of f(x,.) over a y-grid, next to the
// analytic per-x constant when the field declares one.
struct LipschitzEstimate {
    double x;
    double estimate;
    std::optional<double> analytic;
};

// Estimates the Lipschitz constant of f(x,.) from difference quotients.
// The grid is restricted to the domain, sorted, and deduplicated, and
// must keep at least two points; declared breakpoints of f(x,.) inside
// the grid's range are added so the steepest piece cannot fall between
// grid points. The maximum over adjacent pairs equals the maximum over
// all pairs, since any wider quotient is a weighted mean of adjacent
// ones.
LipschitzEstimate lipschitz_per_x(const RhsFunction& rhs, double x,
                                  std::span<const double> y_grid);

// Slope of the quadrant field across its middle sector at abscissa x:
// (f(x, x^2) - f(x, x^2/2)) / (x^2/2). Equals 5/x, so it grows without
// bound as x -> 0+; requires x > 0.
double nonuniform_witness(double x);

// max over nodes of |y_j - sol(x_j)|; every node abscissa must lie in
// the solution's validity interval. Empty curves give 0.
double sup_distance(const PolygonalCurve& curve,
                    const ClosedFormSolution& sol);

struct ConvergenceEntry {
    double h;
    double dist_phi1;
    double dist_phi2;
};

// One integration per step size, with sup-norm distances to the two
// reference solutions. target names the reference the family converges
// to: ref2 when a push is set, ref1 otherwise.
struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    std::string target;
};

// Integrates from (x0,y0) to x_end once per step size (push_euler when
// push is set, euler otherwise) and tabulates distances to ref1 and
// ref2. h_seq must be strictly decreasing and each h must divide
// x_end - x0 into a whole number of steps.
ConvergenceReport convergence_study(const RhsFunction& rhs,
                                    std::optional<double> push,
                                    std::span<const double> h_seq,
                                    double x_end,
                                    const ClosedFormSolution& ref1,
                                    const ClosedFormSolution& ref2,
                                    SlopeAt slope_at = SlopeAt::Left,
                                    double x0 = 0, double y0 = 0);

}  // namespace eulerpoly

#endif
