#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "eulerpoly/analysis.hpp"

using namespace eulerpoly;

TEST_CASE("difference quotients recover the per-abscissa constant") {
    const RhsFunction f = counterexample_rhs();
    const std::vector<double> grid{0, 0.25, 0.5, 0.6, 0.75, 1.0, 1.5};
    const LipschitzEstimate e = lipschitz_per_x(f, 1.0, grid);
    CHECK(e.x == 1.0);
    CHECK(e.estimate == doctest::Approx(5.0).epsilon(1e-12));
    REQUIRE(e.analytic.has_value());
    CHECK(*e.analytic == 5.0);
}

TEST_CASE("the constant vanishes at x = 0") {
    const RhsFunction f = counterexample_rhs();
    const std::vector<double> grid{0, 0.5, 1.0, 2.0};
    const LipschitzEstimate e = lipschitz_per_x(f, 0.0, grid);
    CHECK(e.estimate == 0.0);
    REQUIRE(e.analytic.has_value());
    CHECK(*e.analytic == 0.0);
}

TEST_CASE("declared breakpoints are folded into coarse grids") {
    const RhsFunction f = counterexample_rhs();
    // at x = 0.1 the whole middle sector falls between the first two
    // lattice points; only the added breakpoints expose the steep piece
    const std::vector<double> coarse{0, 0.5, 1.0, 1.5, 2.0};
    const LipschitzEstimate e = lipschitz_per_x(f, 0.1, coarse);
    CHECK(e.estimate == doctest::Approx(50.0).epsilon(1e-9));
    REQUIRE(e.analytic.has_value());
    CHECK(*e.analytic == doctest::Approx(50.0).epsilon(1e-9));
}

TEST_CASE("grid estimates never exceed the analytic constant") {
    const RhsFunction f = counterexample_rhs();
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> xi(1, 100);
    std::uniform_int_distribution<int> yi(0, 2000);
    std::uniform_int_distribution<int> count(2, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = xi(rng) / 100.0;
        std::vector<double> grid{0.0, 2.0};
        const int n = count(rng);
        for (int i = 0; i < n; ++i) grid.push_back(yi(rng) / 1000.0);
        const LipschitzEstimate e = lipschitz_per_x(f, x, grid);
        REQUIRE(e.analytic.has_value());
        CHECK(e.estimate <= *e.analytic + 1e-9);

        // with both breakpoints present the bound is attained
        const std::vector<double> exact{0.0, x * x / 2, x * x, 2.0};
        const LipschitzEstimate full = lipschitz_per_x(f, x, exact);
        CHECK(full.estimate ==
              doctest::Approx(*full.analytic).epsilon(1e-9));
    }
}

TEST_CASE("degenerate grids and bad abscissas are rejected") {
    const RhsFunction f = counterexample_rhs();
    CHECK_THROWS_AS(lipschitz_per_x(f, -0.5, std::vector<double>{0, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(lipschitz_per_x(f, 0.5, std::vector<double>{1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        lipschitz_per_x(f, 0.5, std::vector<double>{-3.0, -2.0}),
        std::invalid_argument);
}

TEST_CASE("the middle-sector quotient is five over x") {
    CHECK(nonuniform_witness(1.0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(nonuniform_witness(0.5) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(nonuniform_witness(0.1) == doctest::Approx(50.0).epsilon(1e-12));
    for (int k = 0; k <= 20; ++k) {
        const double x = std::ldexp(1.0, -k);
        CHECK(nonuniform_witness(x) * x ==
              doctest::Approx(5.0).epsilon(1e-12));
    }
    // grows without bound toward zero
    CHECK(nonuniform_witness(1e-8) >= 4.9e8);
    CHECK_THROWS_AS(nonuniform_witness(0.0), std::domain_error);
    CHECK_THROWS_AS(nonuniform_witness(-1.0), std::domain_error);
}

TEST_CASE("sup distance over curves") {
    const ClosedFormSolution p1 = phi1_on_quadrant();
    PolygonalCurve exact;
    exact.step = 0.1;
    for (int j = 0; j <= 10; ++j) {
        const double x = 0.1 * j;
        exact.nodes.push_back({x, p1.value(x)});
    }
    CHECK(sup_distance(exact, p1) == 0.0);

    PolygonalCurve origin;
    origin.step = 1;
    origin.nodes = {{0, 0}};
    CHECK(sup_distance(origin, phi2_on_quadrant()) == 0.0);

    // the coarse pushed polygon deviates most at its far end
    const IntegrationSpec spec{counterexample_rhs(), 0, 0, 0.1, 7, 1.0,
                               SlopeAt::Right};
    CHECK(sup_distance(push_euler(spec), phi2_on_quadrant()) ==
          doctest::Approx(0.175).epsilon(1e-9));

    PolygonalCurve outside;
    outside.step = 1;
    outside.nodes = {{-1, 0}};
    CHECK_THROWS_AS(sup_distance(outside, p1), std::domain_error);
}

TEST_CASE("step refinement drives each family to its own solution") {
    const RhsFunction f = counterexample_rhs();
    const ClosedFormSolution p1 = phi1_on_quadrant();
    const ClosedFormSolution p2 = phi2_on_quadrant();
    const std::vector<double> hs{0.1, 0.05, 0.01};

    const ConvergenceReport pushed =
        convergence_study(f, 1.0, hs, 0.8, p1, p2, SlopeAt::Right);
    CHECK(pushed.target == "phi2");
    REQUIRE(pushed.entries.size() == 3);
    CHECK(pushed.entries[0].h == 0.1);
    for (std::size_t i = 1; i < 3; ++i)
        CHECK(pushed.entries[i].dist_phi2 <
              pushed.entries[i - 1].dist_phi2);

    const ConvergenceReport pushed_left =
        convergence_study(f, 1.0, hs, 0.8, p1, p2, SlopeAt::Left);
    for (std::size_t i = 1; i < 3; ++i)
        CHECK(pushed_left.entries[i].dist_phi2 <
              pushed_left.entries[i - 1].dist_phi2);
    CHECK(pushed_left.entries[2].dist_phi2 ==
          doctest::Approx(0.00985).epsilon(1e-9));

    const ConvergenceReport plain =
        convergence_study(f, std::nullopt, hs, 0.8, p1, p2);
    CHECK(plain.target == "phi1");
    for (std::size_t i = 1; i < 3; ++i)
        CHECK(plain.entries[i].dist_phi1 <
              plain.entries[i - 1].dist_phi1);
    // the plain family cannot approach the steep solution
    for (const ConvergenceEntry& e : plain.entries)
        CHECK(e.dist_phi2 > 0.5);
}

TEST_CASE("convergence sweeps validate their inputs") {
    const RhsFunction f = counterexample_rhs();
    const ClosedFormSolution p1 = phi1_on_quadrant();
    const ClosedFormSolution p2 = phi2_on_quadrant();
    CHECK_THROWS_AS(
        convergence_study(f, std::nullopt, std::vector<double>{}, 1, p1, p2),
        std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(f, std::nullopt,
                                      std::vector<double>{0.05, 0.1}, 1, p1,
                                      p2),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        convergence_study(f, std::nullopt, std::vector<double>{0.3}, 1, p1,
                          p2),
        std::invalid_argument);
    CHECK_THROWS_AS(
        convergence_study(f, std::nullopt, std::vector<double>{0.1}, 0, p1,
                          p2),
        std::invalid_argument);
}

TEST_CASE("a zero field and the zero solution coincide") {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const RhsFunction zero("zero", Rectangle{-inf, inf, -inf, inf},
                           [](double, double) { return 0.0; });
    const ClosedFormSolution flat("flat", [](double) { return 0.0; },
                                  [](double) { return 0.0; },
                                  Interval{-inf, inf});
    const ConvergenceReport r = convergence_study(
        zero, std::nullopt, std::vector<double>{0.5, 0.25}, 2, flat, flat);
    REQUIRE(r.entries.size() == 2);
    for (const ConvergenceEntry& e : r.entries) {
        CHECK(e.dist_phi1 == 0.0);
        CHECK(e.dist_phi2 == 0.0);
    }
}
