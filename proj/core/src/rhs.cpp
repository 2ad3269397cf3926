#include "eulerpoly/rhs.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eulerpoly {

namespace {

[[noreturn]] void throw_outside(const std::string& what, double x, double y) {
    std::ostringstream msg;
    msg << what << ": point (" << x << ", " << y << ") outside domain";
    throw std::domain_error(msg.str());
}

}  // namespace

const char* to_string(Region r) noexcept {
    switch (r) {
        case Region::Lower: return "lower";
        case Region::Middle: return "middle";
        case Region::Upper: return "upper";
    }
    return "?";
}

Region classify_region(double x, double y) {
    // Negated comparisons so NaN input is rejected too.
    if (!(x >= 0) || !(y >= 0)) throw_outside("classify_region", x, y);
    if (y <= x * x / 2) return Region::Lower;
    if (y >= x * x) return Region::Upper;
    return Region::Middle;
}

double eval_counterexample(double x, double y) {
    switch (classify_region(x, y)) {
        case Region::Lower: return lower_branch(x);
        case Region::Upper: return upper_branch(x);
        case Region::Middle: return middle_branch(x, y);
    }
    throw std::logic_error("eval_counterexample: unreachable");
}

double eval_extended(double x, double y) {
    if (!(x >= -1) || !(x <= 1) || !(y >= -1) || !(y <= 1))
        throw_outside("eval_extended", x, y);
    if (x < 0) return 0;
    if (y < 0) return x / 2;
    return eval_counterexample(x, y);
}

RhsFunction::RhsFunction(std::string name, Rectangle domain, Eval eval,
                         Breakpoints y_breakpoints,
                         LipschitzBound lipschitz_in_y)
    : name_(std::move(name)),
      domain_(domain),
      eval_(std::move(eval)),
      breakpoints_(std::move(y_breakpoints)),
      lipschitz_(std::move(lipschitz_in_y)) {
    if (!eval_) throw std::invalid_argument("RhsFunction: eval is empty");
}

double RhsFunction::operator()(double x, double y) const {
    if (!domain_.contains(x, y)) throw_outside(name_, x, y);
    return eval_(x, y);
}

std::vector<double> RhsFunction::y_breakpoints(double x) const {
    if (!breakpoints_) return {};
    return breakpoints_(x);
}

std::optional<double> RhsFunction::lipschitz_in_y(double x) const {
    if (!lipschitz_) return std::nullopt;
    return lipschitz_(x);
}

RhsFunction counterexample_rhs() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return RhsFunction(
        "counterexample", Rectangle{0, inf, 0, inf},
        [](double x, double y) { return eval_counterexample(x, y); },
        [](double x) {
            return std::vector<double>{x * x / 2, x * x};
        },
        [](double x) { return x > 0 ? 5 / x : 0.0; });
}

RhsFunction extended_rhs() {
    return RhsFunction(
        "extended", Rectangle{-1, 1, -1, 1},
        [](double x, double y) { return eval_extended(x, y); },
        [](double x) {
            if (x < 0) return std::vector<double>{};
            return std::vector<double>{0.0, x * x / 2, x * x};
        },
        [](double x) { return x > 0 ? 5 / x : 0.0; });
}

}  // namespace eulerpoly
