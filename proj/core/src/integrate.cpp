#include "eulerpoly/integrate.hpp"

#include <cmath>
#include <sstream>

namespace eulerpoly {

namespace {

std::string escape_message(std::size_t index, double x, double y) {
    std::ostringstream msg;
    msg << "integration left the field domain at step " << index << " (x = "
        << x << ", y = " << y << ")";
    return msg.str();
}

void validate(const IntegrationSpec& spec) {
    if (!(spec.h > 0) || !std::isfinite(spec.h))
        throw std::invalid_argument(
            "integration: step size must be positive and finite");
    if (spec.steps < 1)
        throw std::invalid_argument("integration: steps must be at least 1");
    if (!spec.rhs.domain().contains(spec.x0, spec.y0))
        throw DomainEscapeError(0, spec.x0, spec.y0);
}

PolygonalCurve run(const IntegrationSpec& spec) {
    validate(spec);
    const Rectangle& dom = spec.rhs.domain();
    PolygonalCurve curve;
    curve.step = spec.h;
    curve.nodes.reserve(static_cast<std::size_t>(spec.steps) + 1);
    curve.nodes.push_back({spec.x0, spec.y0});
    for (int j = 1; j <= spec.steps; ++j) {
        const Node prev = curve.nodes.back();
        const double xj = spec.x0 + j * spec.h;
        double slope;
        if (spec.push && j == 1) {
            slope = *spec.push;
        } else {
            const double xi = spec.slope_at == SlopeAt::Left ? prev.x : xj;
            if (!dom.contains(xi, prev.y))
                throw DomainEscapeError(static_cast<std::size_t>(j), xi,
                                        prev.y);
            slope = spec.rhs(xi, prev.y);
        }
        const double yj = prev.y + slope * spec.h;
        if (!dom.contains(xj, yj))
            throw DomainEscapeError(static_cast<std::size_t>(j), xj, yj);
        curve.nodes.push_back({xj, yj});
    }
    return curve;
}

}  // namespace

DomainEscapeError::DomainEscapeError(std::size_t index, double x, double y)
    : std::runtime_error(escape_message(index, x, y)),
      index_(index),
      x_(x),
      y_(y) {}

PolygonalCurve euler(const IntegrationSpec& spec) {
    if (spec.push)
        throw std::invalid_argument(
            "euler: spec carries a push slope; use push_euler");
    return run(spec);
}

PolygonalCurve push_euler(const IntegrationSpec& spec) {
    if (!spec.push)
        throw std::invalid_argument("push_euler: spec.push is required");
    return run(spec);
}

PolygonalCurve emit_clipped(const PolygonalCurve& curve, double y_max) {
    if (curve.nodes.empty()) return curve;
    if (curve.nodes.front().y > y_max)
        return PolygonalCurve{{curve.nodes.front()}, curve.step};
    for (std::size_t j = 1; j < curve.nodes.size(); ++j) {
        if (!(curve.nodes[j].y > y_max)) continue;
        PolygonalCurve out;
        out.step = curve.step;
        out.nodes.assign(curve.nodes.begin(),
                         curve.nodes.begin() + static_cast<std::ptrdiff_t>(j));
        const Node& a = curve.nodes[j - 1];
        const Node& b = curve.nodes[j];
        // a.y <= y_max < b.y. A segment starting exactly on the level
        // contributes no extra node.
        if (a.y < y_max)
            out.nodes.push_back(
                {a.x + (y_max - a.y) * curve.step / (b.y - a.y), y_max});
        return out;
    }
    return curve;
}

PolygonalCurve integrate_clipped(const IntegrationSpec& spec, double y_max) {
    validate(spec);
    const Rectangle& dom = spec.rhs.domain();
    PolygonalCurve curve;
    curve.step = spec.h;
    curve.nodes.push_back({spec.x0, spec.y0});
    for (int j = 1; j <= spec.steps; ++j) {
        const Node prev = curve.nodes.back();
        const double xj = spec.x0 + j * spec.h;
        double slope;
        if (spec.push && j == 1) {
            slope = *spec.push;
        } else {
            const double xi = spec.slope_at == SlopeAt::Left ? prev.x : xj;
            if (!dom.contains(xi, prev.y)) break;
            slope = spec.rhs(xi, prev.y);
        }
        const double yj = prev.y + slope * spec.h;
        if (yj > y_max) {
            // Keep the overshooting node for interpolation; emit_clipped
            // below replaces it with the crossing point.
            curve.nodes.push_back({xj, yj});
            break;
        }
        if (!dom.contains(xj, yj)) break;
        curve.nodes.push_back({xj, yj});
    }
    return emit_clipped(curve, y_max);
}

}  // namespace eulerpoly
