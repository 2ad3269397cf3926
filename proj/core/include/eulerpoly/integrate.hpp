#ifndef EULERPOLY_INTEGRATE_HPP
#define EULERPOLY_INTEGRATE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eulerpoly/rhs.hpp"

namespace eulerpoly {

struct Node {
    double x;
    double y;
};

// Vertices of a polygonal approximant. Node j sits at abscissa
// x0 + j*step, computed directly from j rather than by accumulation,
// except for a final clipped node which may sit between lattice points.
struct PolygonalCurve {
    std::vector<Node> nodes;
    double step = 0;
};

// Where the slope of step j is sampled: at the left node
// f(x_{j-1}, y_{j-1}) (the classical method) or at the right abscissa
// f(x_j, y_{j-1}).
enum class SlopeAt { Left, Right };

struct IntegrationSpec {
    RhsFunction rhs;
    double x0 = 0;
    double y0 = 0;
    double h = 0;
    int steps = 0;
    // Prescribed slope of the first segment. Set for push_euler, absent
    // for euler.
    std::optional<double> push;
    SlopeAt slope_at = SlopeAt::Left;
};

// Thrown when a node or slope sample leaves the field's domain; index()
// is the step at which it happened (0 for a bad starting point).
class DomainEscapeError : public std::runtime_error {
  public:
    DomainEscapeError(std::size_t index, double x, double y);

    std::size_t index() const noexcept { return index_; }
    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }

  private:
    std::size_t index_;
    double x_;
    double y_;
};

// Explicit Euler: y_j = y_{j-1} + f(., y_{j-1})*h for j = 1..steps, with
// the slope abscissa chosen by spec.slope_at. spec.push must be absent.
PolygonalCurve euler(const IntegrationSpec& spec);

// Euler with a prescribed first slope: the first segment climbs with
// slope spec.push (no field evaluation), after which the recurrence is
// the same as euler. spec.push must be present.
PolygonalCurve push_euler(const IntegrationSpec& spec);

// Truncates at the first segment crossing y = y_max and appends the
// linearly interpolated crossing point; a curve that never exceeds y_max
// is returned unchanged. A curve whose first node already lies above
// y_max degenerates to that single node.
PolygonalCurve emit_clipped(const PolygonalCurve& curve, double y_max);

// Like euler/push_euler (chosen by spec.push), but a step that would
// leave the field's domain ends the curve instead of throwing, and the
// result is clipped at y_max.
PolygonalCurve integrate_clipped(const IntegrationSpec& spec, double y_max);

}  // namespace eulerpoly

#endif
