#ifndef EULERPOLY_RHS_HPP
#define EULERPOLY_RHS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eulerpoly {

// Closed axis-aligned rectangle; bounds may be infinite.
struct Rectangle {
    double x_lo;
    double x_hi;
    double y_lo;
    double y_hi;

    bool contains(double x, double y) const noexcept {
        return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
    }
};

// Sector of the first quadrant delimited by the parabolas y = x^2/2 and
// y = x^2. Both parabolas belong to the constant-formula sectors: points
// on y = x^2/2 are Lower, points on y = x^2 are Upper, and (0,0) is Lower.
enum class Region { Lower, Middle, Upper };

const char* to_string(Region r) noexcept;

// Requires x >= 0 and y >= 0; throws std::domain_error otherwise.
Region classify_region(double x, double y);

// The three branch formulas of the sector field. middle_branch requires
// x > 0; classify_region routes x = 0 to the constant branches, so the
// division below is never reached with x = 0.
inline double lower_branch(double x) noexcept { return x / 2; }
inline double upper_branch(double x) noexcept { return 3 * x; }
inline double middle_branch(double x, double y) noexcept {
    return x / 2 + 5 * (y - x * x / 2) / x;
}

// Continuous field on [0,inf)^2: x/2 below y = x^2/2, 3x above y = x^2,
// linear in y across the middle sector. For each fixed x the map
// f(x,.) is Lipschitz with constant 5/x, but no single constant works
// for all x at once, and the IVP y' = f(x,y), y(0) = 0 has the two
// solutions x^2/4 and 3x^2/2.
double eval_counterexample(double x, double y);

// Extension of the field to the rectangle [-1,1]^2: 0 for x < 0,
// x/2 for x >= 0 and y < 0, the quadrant field elsewhere.
double eval_extended(double x, double y);

// A scalar field f(x,y) with a declared rectangular domain. Evaluation
// outside the domain throws std::domain_error. Instances are immutable
// and safe to share across threads.
class RhsFunction {
  public:
    using Eval = std::function<double(double, double)>;
    using Breakpoints = std::function<std::vector<double>(double)>;
    using LipschitzBound = std::function<double(double)>;

    RhsFunction(std::string name, Rectangle domain, Eval eval,
                Breakpoints y_breakpoints = {},
                LipschitzBound lipschitz_in_y = {});

    double operator()(double x, double y) const;

    const std::string& name() const noexcept { return name_; }
    const Rectangle& domain() const noexcept { return domain_; }

    // Ordinates where f(x,.) changes formula; empty if none are declared.
    std::vector<double> y_breakpoints(double x) const;

    // Analytic Lipschitz constant of f(x,.), when the field declares one.
    std::optional<double> lipschitz_in_y(double x) const;

  private:
    std::string name_;
    Rectangle domain_;
    Eval eval_;
    Breakpoints breakpoints_;
    LipschitzBound lipschitz_;
};

// The sector field on [0,inf)^2.
RhsFunction counterexample_rhs();

// The sector field extended to [-1,1]^2.
RhsFunction extended_rhs();

}  // namespace eulerpoly

#endif
