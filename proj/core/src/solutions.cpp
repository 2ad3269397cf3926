#include "eulerpoly/solutions.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eulerpoly {

namespace {

[[noreturn]] void throw_outside_validity(const std::string& name, double x,
                                         const Interval& validity) {
    std::ostringstream msg;
    msg << name << ": x = " << x << " outside validity [" << validity.lo
        << ", " << validity.hi << "]";
    throw std::domain_error(msg.str());
}

}  // namespace

ClosedFormSolution::ClosedFormSolution(std::string name, Map formula,
                                       Map derivative, Interval validity)
    : name_(std::move(name)),
      formula_(std::move(formula)),
      derivative_(std::move(derivative)),
      validity_(validity) {
    if (!formula_ || !derivative_)
        throw std::invalid_argument(
            "ClosedFormSolution: formula and derivative are required");
    if (!(validity_.lo <= validity_.hi))
        throw std::invalid_argument(
            "ClosedFormSolution: empty validity interval");
}

double ClosedFormSolution::value(double x) const {
    if (!validity_.contains(x)) throw_outside_validity(name_, x, validity_);
    return formula_(x);
}

double ClosedFormSolution::slope(double x) const {
    if (!validity_.contains(x)) throw_outside_validity(name_, x, validity_);
    return derivative_(x);
}

ClosedFormSolution phi1_on_quadrant() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return ClosedFormSolution(
        "phi1", [](double x) { return x * x / 4; },
        [](double x) { return x / 2; }, Interval{0, inf});
}

ClosedFormSolution phi2_on_quadrant() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return ClosedFormSolution(
        "phi2", [](double x) { return 3 * x * x / 2; },
        [](double x) { return 3 * x; }, Interval{0, inf});
}

ClosedFormSolution phi1_on_rectangle() {
    return ClosedFormSolution(
        "phi1", [](double x) { return x < 0 ? 0 : x * x / 4; },
        [](double x) { return x < 0 ? 0 : x / 2; }, Interval{-1, 1});
}

ClosedFormSolution phi2_on_rectangle() {
    // 3x^2/2 reaches the top edge y = 1 at sqrt(2/3).
    const double exit = std::sqrt(2.0 / 3.0);
    return ClosedFormSolution(
        "phi2", [](double x) { return x < 0 ? 0 : 3 * x * x / 2; },
        [](double x) { return x < 0 ? 0 : 3 * x; }, Interval{-1, exit});
}

std::vector<double> solution_residuals(const ClosedFormSolution& sol,
                                       const RhsFunction& rhs,
                                       std::span<const double> grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid)
        out.push_back(std::abs(sol.slope(x) - rhs(x, sol.value(x))));
    return out;
}

bool verify_solution(const ClosedFormSolution& sol, const RhsFunction& rhs,
                     std::span<const double> grid, double tol) {
    for (double r : solution_residuals(sol, rhs, grid))
        if (!(r <= tol)) return false;
    return true;
}

}  // namespace eulerpoly
