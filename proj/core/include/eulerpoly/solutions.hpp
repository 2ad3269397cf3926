#ifndef EULERPOLY_SOLUTIONS_HPP
#define EULERPOLY_SOLUTIONS_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "eulerpoly/rhs.hpp"

namespace eulerpoly {

// Closed interval; hi may be +infinity.
struct Interval {
    double lo;
    double hi;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

// An exact solution x -> y(x) of an initial value problem, carried as a
// formula, its derivative, and the closed interval on which it is valid.
// value() and slope() outside the validity interval throw
// std::domain_error.
class ClosedFormSolution {
  public:
    using Map = std::function<double(double)>;

    ClosedFormSolution(std::string name, Map formula, Map derivative,
                       Interval validity);

    double value(double x) const;
    double slope(double x) const;

    const std::string& name() const noexcept { return name_; }
    const Interval& validity() const noexcept { return validity_; }

  private:
    std::string name_;
    Map formula_;
    Map derivative_;
    Interval validity_;
};

// x^2/4 on [0,inf); runs inside the lower sector of the quadrant field.
ClosedFormSolution phi1_on_quadrant();

// 3x^2/2 on [0,inf); runs inside the upper sector. Both solve
// y' = f(x,y), y(0) = 0 for the same field.
ClosedFormSolution phi2_on_quadrant();

// Extensions by zero to negative x, restricted to the rectangle [-1,1]^2.
// phi1 is valid on all of [-1,1]; phi2 reaches y = 1 at x = sqrt(2/3)
// and is valid on [-1, sqrt(2/3)].
ClosedFormSolution phi1_on_rectangle();
ClosedFormSolution phi2_on_rectangle();

// |sol.slope(x) - rhs(x, sol.value(x))| per grid point, in grid order.
std::vector<double> solution_residuals(const ClosedFormSolution& sol,
                                       const RhsFunction& rhs,
                                       std::span<const double> grid);

// True iff every residual over the grid is <= tol.
bool verify_solution(const ClosedFormSolution& sol, const RhsFunction& rhs,
                     std::span<const double> grid, double tol);

}  // namespace eulerpoly

#endif
