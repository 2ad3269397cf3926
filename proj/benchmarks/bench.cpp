#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "eulerpoly/analysis.hpp"
#include "eulerpoly/figure.hpp"
#include "eulerpoly/integrate.hpp"
#include "eulerpoly/rhs.hpp"
#include "eulerpoly/solutions.hpp"

namespace {

using namespace eulerpoly;

void BM_Euler(benchmark::State& state) {
    const int steps = static_cast<int>(state.range(0));
    const double h = 1.0 / steps;
    const IntegrationSpec spec{counterexample_rhs(), 0,  0, h, steps,
                               std::nullopt,         SlopeAt::Left};
    for (auto _ : state) {
        PolygonalCurve curve = euler(spec);
        benchmark::DoNotOptimize(curve);
    }
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_Euler)->Arg(100)->Arg(1000)->Arg(10000);

void BM_PushEuler(benchmark::State& state) {
    const int steps = static_cast<int>(state.range(0));
    const double h = 1.0 / steps;
    const IntegrationSpec spec{counterexample_rhs(), 0,   0,
                               h,                    steps, 1.0,
                               SlopeAt::Right};
    for (auto _ : state) {
        PolygonalCurve curve = push_euler(spec);
        benchmark::DoNotOptimize(curve);
    }
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_PushEuler)->Arg(100)->Arg(1000)->Arg(10000);

void BM_LipschitzPerX(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    const RhsFunction rhs = counterexample_rhs();
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i) grid.push_back(2.0 * i / (points - 1));
    for (auto _ : state) {
        LipschitzEstimate est = lipschitz_per_x(rhs, 0.5, grid);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_LipschitzPerX)->Arg(200)->Arg(2000);

void BM_SupDistance(benchmark::State& state) {
    const IntegrationSpec spec{counterexample_rhs(), 0,  0, 0.001, 1000,
                               std::nullopt,         SlopeAt::Left};
    const PolygonalCurve curve = euler(spec);
    const ClosedFormSolution phi1 = phi1_on_quadrant();
    for (auto _ : state) {
        double d = sup_distance(curve, phi1);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SupDistance);

void BM_ConvergenceStudy(benchmark::State& state) {
    const RhsFunction rhs = counterexample_rhs();
    const ClosedFormSolution phi1 = phi1_on_quadrant();
    const ClosedFormSolution phi2 = phi2_on_quadrant();
    const double hs[] = {0.02, 0.01, 0.005};
    for (auto _ : state) {
        ConvergenceReport report =
            convergence_study(rhs, std::nullopt, hs, 1.0, phi1, phi2);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_ConvergenceStudy);

void BM_PanelSvg(benchmark::State& state) {
    const FigurePanel panel = make_figure_panel(0.01);
    for (auto _ : state) {
        std::string svg = panel_svg(panel);
        benchmark::DoNotOptimize(svg);
    }
}
BENCHMARK(BM_PanelSvg);

}  // namespace

BENCHMARK_MAIN();
