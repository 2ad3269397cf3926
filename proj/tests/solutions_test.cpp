#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "eulerpoly/solutions.hpp"

using namespace eulerpoly;

TEST_CASE("reference solution values and slopes") {
    const ClosedFormSolution p1 = phi1_on_quadrant();
    const ClosedFormSolution p2 = phi2_on_quadrant();
    CHECK(p1.name() == "phi1");
    CHECK(p2.name() == "phi2");
    CHECK(p1.value(0) == 0.0);
    CHECK(p2.value(0) == 0.0);
    CHECK(p1.value(1) == 0.25);
    CHECK(p1.value(0.5) == 0.0625);
    CHECK(p2.value(0.5) == 0.375);
    CHECK(p2.value(1) == 1.5);
    CHECK(p1.slope(1) == 0.5);
    CHECK(p2.slope(1) == 3.0);
}

TEST_CASE("validity intervals are enforced") {
    CHECK_THROWS_AS(phi1_on_quadrant().value(-0.1), std::domain_error);
    CHECK_THROWS_AS(phi1_on_quadrant().slope(-0.1), std::domain_error);
    CHECK_THROWS_AS(phi1_on_rectangle().value(1.1), std::domain_error);
    CHECK_THROWS_AS(phi2_on_rectangle().value(0.9), std::domain_error);
    CHECK(phi2_on_rectangle().value(0.8) == doctest::Approx(0.96));
    CHECK(phi1_on_rectangle().value(-0.5) == 0.0);
    CHECK(phi2_on_rectangle().value(-1) == 0.0);
    // the steep parabola leaves the square exactly where 3x^2/2 hits 1
    const Interval validity = phi2_on_rectangle().validity();
    CHECK(validity.hi == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(phi2_on_rectangle().value(validity.hi) <= 1.0);
}

TEST_CASE("slopes match central differences") {
    const double step = 1e-5;
    for (const ClosedFormSolution& sol :
         {phi1_on_quadrant(), phi2_on_quadrant()}) {
        for (int i = 1; i <= 9; ++i) {
            const double x = 0.1 * i;
            const double approx =
                (sol.value(x + step) - sol.value(x - step)) / (2 * step);
            CHECK(std::abs(sol.slope(x) - approx) <= 1e-6);
        }
    }
    // the rectangle versions are flat left of zero
    for (const ClosedFormSolution& sol :
         {phi1_on_rectangle(), phi2_on_rectangle()}) {
        for (int i = 1; i <= 9; ++i) {
            const double x = -0.1 * i;
            const double approx =
                (sol.value(x + step) - sol.value(x - step)) / (2 * step);
            CHECK(std::abs(sol.slope(x) - approx) <= 1e-6);
        }
    }
}

TEST_CASE("residual verification over grids") {
    const RhsFunction f = counterexample_rhs();
    const std::vector<double> grid{0, 0.25, 0.5, 0.75, 1.0};
    CHECK(verify_solution(phi1_on_quadrant(), f, grid, 1e-12));
    CHECK(verify_solution(phi2_on_quadrant(), f, grid, 1e-12));
    const std::vector<double> res =
        solution_residuals(phi1_on_quadrant(), f, grid);
    REQUIRE(res.size() == grid.size());
    for (double r : res) CHECK(r == 0.0);

    // a wrong derivative is caught
    const ClosedFormSolution fake(
        "fake", [](double x) { return x * x / 4; },
        [](double x) { return x; }, Interval{0, 2});
    CHECK_FALSE(verify_solution(fake, f, std::vector<double>{0.5}, 1e-12));

    const RhsFunction g = extended_rhs();
    const std::vector<double> left{-1, -0.5, 0, 0.25, 0.5, 0.75, 1.0};
    CHECK(verify_solution(phi1_on_rectangle(), g, left, 1e-12));
    std::vector<double> steep{-1, -0.5, 0, 0.25, 0.5, 0.75};
    steep.push_back(phi2_on_rectangle().validity().hi);
    CHECK(verify_solution(phi2_on_rectangle(), g, steep, 1e-12));
}

TEST_CASE("constructor rejects bad input") {
    const ClosedFormSolution::Map zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(
        ClosedFormSolution("s", ClosedFormSolution::Map{}, zero,
                           Interval{0, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(ClosedFormSolution("s", zero, zero, Interval{1, 0}),
                    std::invalid_argument);
}
