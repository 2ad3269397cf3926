#include "eulerpoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eulerpoly {

LipschitzEstimate lipschitz_per_x(const RhsFunction& rhs, double x,
                                  std::span<const double> y_grid) {
    const Rectangle& dom = rhs.domain();
    if (!(x >= dom.x_lo) || !(x <= dom.x_hi))
        throw std::domain_error("lipschitz_per_x: x outside the field domain");

    std::vector<double> ys;
    ys.reserve(y_grid.size());
    for (double y : y_grid)
        if (dom.contains(x, y)) ys.push_back(y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (ys.size() < 2)
        throw std::invalid_argument(
            "lipschitz_per_x: need at least two distinct grid points inside "
            "the domain");

    // Quotients over vanishing gaps amplify evaluation roundoff, so a
    // declared breakpoint is added only when no grid point sits within a
    // small fraction of the grid's range.
    const double merge_gap = 1e-4 * (ys.back() - ys.front());
    for (double b : rhs.y_breakpoints(x)) {
        if (b < ys.front() || b > ys.back()) continue;
        const auto it = std::lower_bound(ys.begin(), ys.end(), b);
        const double above = *it - b;
        const double below = it == ys.begin() ? above : b - *(it - 1);
        if (std::min(above, below) < merge_gap) continue;
        ys.insert(it, b);
    }

    // Adjacent pairs suffice: the quotient of any wider pair is a
    // weighted mean of the adjacent ones it spans.
    double estimate = 0;
    double prev_y = ys.front();
    double prev_f = rhs(x, prev_y);
    for (std::size_t i = 1; i < ys.size(); ++i) {
        const double cur_f = rhs(x, ys[i]);
        estimate =
            std::max(estimate, std::abs(cur_f - prev_f) / (ys[i] - prev_y));
        prev_y = ys[i];
        prev_f = cur_f;
    }
    return {x, estimate, rhs.lipschitz_in_y(x)};
}

double nonuniform_witness(double x) {
    if (!(x > 0))
        throw std::domain_error("nonuniform_witness: requires x > 0");
    const double top = x * x;
    const double bottom = top / 2;
    return (eval_counterexample(x, top) - eval_counterexample(x, bottom)) /
           (top - bottom);
}

double sup_distance(const PolygonalCurve& curve,
                    const ClosedFormSolution& sol) {
    double worst = 0;
    for (const Node& n : curve.nodes)
        worst = std::max(worst, std::abs(n.y - sol.value(n.x)));
    return worst;
}

ConvergenceReport convergence_study(const RhsFunction& rhs,
                                    std::optional<double> push,
                                    std::span<const double> h_seq,
                                    double x_end,
                                    const ClosedFormSolution& ref1,
                                    const ClosedFormSolution& ref2,
                                    SlopeAt slope_at, double x0, double y0) {
    if (h_seq.empty())
        throw std::invalid_argument("convergence_study: empty step list");
    const double span = x_end - x0;
    if (!(span > 0))
        throw std::invalid_argument("convergence_study: x_end must exceed x0");

    ConvergenceReport report;
    report.target = push ? ref2.name() : ref1.name();
    double prev_h = std::numeric_limits<double>::infinity();
    for (double h : h_seq) {
        if (!(h > 0) || !(h < prev_h))
            throw std::invalid_argument(
                "convergence_study: step sizes must be positive and strictly "
                "decreasing");
        prev_h = h;
        const double steps_real = span / h;
        const int steps = static_cast<int>(std::lround(steps_real));
        if (steps < 1 || std::abs(steps_real - steps) > 1e-6)
            throw std::invalid_argument(
                "convergence_study: every step size must divide x_end - x0");
        const IntegrationSpec spec{rhs, x0, y0, h, steps, push, slope_at};
        const PolygonalCurve curve = push ? push_euler(spec) : euler(spec);
        report.entries.push_back(
            {h, sup_distance(curve, ref1), sup_distance(curve, ref2)});
    }
    return report;
}

}  // namespace eulerpoly
