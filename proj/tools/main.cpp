#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "eulerpoly/analysis.hpp"
#include "eulerpoly/csv.hpp"
#include "eulerpoly/figure.hpp"
#include "eulerpoly/integrate.hpp"

namespace {

using namespace eulerpoly;
namespace fs = std::filesystem;

RhsFunction make_rhs(const std::string& name) {
    return name == "extended" ? extended_rhs() : counterexample_rhs();
}

SlopeAt parse_slope_at(const std::string& name) {
    return name == "right" ? SlopeAt::Right : SlopeAt::Left;
}

ClosedFormSolution make_solution(const std::string& which,
                                 const std::string& rhs_name) {
    const bool quadrant = rhs_name != "extended";
    if (which == "phi2")
        return quadrant ? phi2_on_quadrant() : phi2_on_rectangle();
    return quadrant ? phi1_on_quadrant() : phi1_on_rectangle();
}

// "lo:hi:step" -> inclusive lattice. The endpoint survives rounding
// slack of a billionth of a step and is clamped back to hi.
std::vector<double> parse_grid(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("grid '" + text +
                                     "' is not lo:hi:step with step > 0");
    };
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) throw bad();
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw bad();
    double lo = 0, hi = 0, step = 0;
    try {
        lo = std::stod(text.substr(0, c1));
        hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw bad();
    }
    if (!(step > 0) || !(hi >= lo)) throw bad();
    std::vector<double> out;
    for (int j = 0;; ++j) {
        const double x = lo + j * step;
        if (x > hi + step * 1e-9) break;
        out.push_back(std::min(x, hi));
        if (out.size() > 2000000) throw std::invalid_argument("grid too fine");
    }
    return out;
}

struct IntegrateOpts {
    std::string rhs = "counterexample";
    double x0 = 0;
    double y0 = 0;
    double h = 0;
    int steps = 0;
    std::optional<double> push;
    std::string slope_at = "left";
    std::optional<double> clip_y;
    std::string out = "curve.csv";
};

struct FigureOpts {
    std::string format = "csv";
    std::string out = ".";
};

struct LipschitzOpts {
    std::string rhs = "counterexample";
    std::vector<double> xs;
    std::string y_grid = "0:2:0.01";
    std::string out = "lipschitz.csv";
};

struct WitnessOpts {
    std::vector<double> xs;
    std::string out = "witness.csv";
};

struct ConvergeOpts {
    std::string rhs = "counterexample";
    std::optional<double> push;
    std::vector<double> hs;
    double x_end = 0;
    std::string slope_at = "left";
    double x0 = 0;
    double y0 = 0;
    std::string out = "convergence.csv";
};

struct VerifyOpts {
    std::string rhs = "counterexample";
    std::string solution;
    std::string grid;
    double tol = 1e-12;
    std::string out = "verify.csv";
};

int run_integrate(const IntegrateOpts& o) {
    const IntegrationSpec spec{make_rhs(o.rhs), o.x0,   o.y0,
                               o.h,             o.steps, o.push,
                               parse_slope_at(o.slope_at)};
    PolygonalCurve curve;
    if (o.clip_y)
        curve = integrate_clipped(spec, *o.clip_y);
    else
        curve = o.push ? push_euler(spec) : euler(spec);
    write_file_atomic(o.out, curve_csv(curve));
    std::cout << "integrate: " << o.rhs << ", h = " << format_double(o.h)
              << ", " << curve.nodes.size() << " nodes -> " << o.out << "\n";
    return 0;
}

int run_figure(const FigureOpts& o) {
    fs::create_directories(o.out);
    std::size_t written = 0;
    for (double h : kPanelSteps) {
        const FigurePanel panel = make_figure_panel(h);
        if (o.format == "svg") {
            write_figure_svg(panel, o.out);
            written += 1;
        } else {
            written += write_figure_csv(panel, o.out).size();
        }
    }
    std::cout << "figure: wrote " << written << " " << o.format
              << " files to " << o.out << "\n";
    return 0;
}

int run_lipschitz(const LipschitzOpts& o) {
    const RhsFunction rhs = make_rhs(o.rhs);
    const std::vector<double> grid = parse_grid(o.y_grid);
    std::vector<LipschitzEstimate> rows;
    rows.reserve(o.xs.size());
    for (double x : o.xs) rows.push_back(lipschitz_per_x(rhs, x, grid));
    write_file_atomic(o.out, lipschitz_csv(rows));
    const auto worst = std::max_element(
        rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return a.estimate < b.estimate;
        });
    std::cout << "lipschitz: " << rows.size() << " abscissas, max estimate "
              << format_double(worst->estimate) << " at x = "
              << format_double(worst->x) << " -> " << o.out << "\n";
    return 0;
}

int run_witness(const WitnessOpts& o) {
    std::vector<double> quotients;
    quotients.reserve(o.xs.size());
    for (double x : o.xs) quotients.push_back(nonuniform_witness(x));
    write_file_atomic(o.out, witness_csv(o.xs, quotients));
    const auto it = std::max_element(quotients.begin(), quotients.end());
    const std::size_t i =
        static_cast<std::size_t>(it - quotients.begin());
    if (quotients.size() == 1)
        std::cout << "witness: quotient " << format_double(quotients[0])
                  << " at x = " << format_double(o.xs[0]) << " -> " << o.out
                  << "\n";
    else
        std::cout << "witness: " << quotients.size()
                  << " quotients, max " << format_double(*it) << " at x = "
                  << format_double(o.xs[i]) << " -> " << o.out << "\n";
    return 0;
}

int run_converge(const ConvergeOpts& o) {
    const RhsFunction rhs = make_rhs(o.rhs);
    const ConvergenceReport report = convergence_study(
        rhs, o.push, o.hs, o.x_end, make_solution("phi1", o.rhs),
        make_solution("phi2", o.rhs), parse_slope_at(o.slope_at), o.x0,
        o.y0);
    write_file_atomic(o.out, convergence_csv(report));
    const ConvergenceEntry& last = report.entries.back();
    const double final_dist =
        report.target == "phi2" ? last.dist_phi2 : last.dist_phi1;
    std::cout << "converge: target " << report.target << ", dist "
              << format_double(final_dist) << " at h = "
              << format_double(last.h) << " -> " << o.out << "\n";
    return 0;
}

int run_verify(const VerifyOpts& o) {
    const RhsFunction rhs = make_rhs(o.rhs);
    const ClosedFormSolution sol = make_solution(o.solution, o.rhs);
    const std::vector<double> grid = parse_grid(o.grid);
    const std::vector<double> residuals = solution_residuals(sol, rhs, grid);
    write_file_atomic(o.out, residual_csv(grid, residuals));
    const double worst =
        residuals.empty()
            ? 0
            : *std::max_element(residuals.begin(), residuals.end());
    const bool ok = worst <= o.tol;
    std::cout << "verify: " << o.solution << " against " << o.rhs
              << ", max residual " << format_double(worst) << " over "
              << grid.size() << " points (tol " << format_double(o.tol)
              << "): " << (ok ? "OK" : "FAIL") << " -> " << o.out << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Euler polygons for an initial value problem with two solutions"};
    app.require_subcommand(1);

    // --h is a step size below, so help keeps only its long flag.
    const auto sub = [&app](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "Print this help message and exit");
        return s;
    };

    IntegrateOpts in;
    CLI::App* integrate = sub(
        "integrate",
        "Run one Euler or pushed-Euler integration and write the nodes");
    integrate->add_option("--rhs", in.rhs, "Field to integrate")
        ->check(CLI::IsMember({"counterexample", "extended"}))
        ->capture_default_str();
    integrate->add_option("--x0", in.x0, "Starting abscissa")
        ->capture_default_str();
    integrate->add_option("--y0", in.y0, "Starting ordinate")
        ->capture_default_str();
    integrate->add_option("--h", in.h, "Step size")
        ->required()
        ->check(CLI::PositiveNumber);
    integrate->add_option("--n", in.steps, "Number of steps")
        ->required()
        ->check(CLI::PositiveNumber);
    integrate->add_option("--k", in.push,
                          "Prescribed slope of the first segment");
    integrate
        ->add_option("--slope-at", in.slope_at,
                     "Abscissa where each step's slope is sampled")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    integrate->add_option(
        "--clip-y", in.clip_y,
        "Clip at this ordinate; domain escapes end the curve instead of "
        "failing");
    integrate->add_option("--out", in.out, "Output CSV path")
        ->capture_default_str();

    FigureOpts fo;
    CLI::App* figure = sub(
        "figure",
        "Write the three standard panels (h = 0.1, 0.05, 0.01): pushed "
        "polygon, references, sector shading");
    figure->add_option("--format", fo.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();
    figure->add_option("--out", fo.out, "Output directory")
        ->capture_default_str();

    LipschitzOpts lo;
    CLI::App* lipschitz = sub(
        "lipschitz",
        "Estimate the Lipschitz constant of f(x,.) per abscissa");
    lipschitz->add_option("--x", lo.xs, "Abscissas, comma separated")
        ->required()
        ->delimiter(',');
    lipschitz->add_option("--y-grid", lo.y_grid, "y lattice as lo:hi:step")
        ->capture_default_str();
    lipschitz->add_option("--out", lo.out, "Output CSV path")
        ->capture_default_str();

    WitnessOpts wo;
    CLI::App* witness = sub(
        "witness",
        "Difference quotient across the middle sector; equals 5/x");
    witness
        ->add_option("--x", wo.xs,
                     "Abscissas, comma separated, each > 0")
        ->required()
        ->delimiter(',');
    witness->add_option("--out", wo.out, "Output CSV path")
        ->capture_default_str();

    ConvergeOpts co;
    CLI::App* converge = sub(
        "converge",
        "Sup-distances to both reference solutions over a step-size sweep");
    converge->add_option("--rhs", co.rhs, "Field to integrate")
        ->check(CLI::IsMember({"counterexample", "extended"}))
        ->capture_default_str();
    converge
        ->add_option("--h", co.hs,
                     "Step sizes, comma separated, strictly decreasing")
        ->required()
        ->delimiter(',');
    converge->add_option("--x-end", co.x_end, "Right end of the range")
        ->required();
    converge->add_option(
        "--k", co.push,
        "Prescribed first slope; switches to pushed integration");
    converge
        ->add_option("--slope-at", co.slope_at,
                     "Abscissa where each step's slope is sampled")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    converge->add_option("--x0", co.x0, "Starting abscissa")
        ->capture_default_str();
    converge->add_option("--y0", co.y0, "Starting ordinate")
        ->capture_default_str();
    converge->add_option("--out", co.out, "Output CSV path")
        ->capture_default_str();

    VerifyOpts vo;
    CLI::App* verify = sub(
        "verify",
        "Check a reference solution against the field and write residuals");
    verify->add_option("--rhs", vo.rhs, "Field to check against")
        ->check(CLI::IsMember({"counterexample", "extended"}))
        ->capture_default_str();
    verify->add_option("--solution", vo.solution, "Reference solution")
        ->required()
        ->check(CLI::IsMember({"phi1", "phi2"}));
    verify->add_option("--grid", vo.grid, "x lattice as lo:hi:step")
        ->required();
    verify->add_option("--tol", vo.tol, "Residual tolerance")
        ->capture_default_str();
    verify->add_option("--out", vo.out, "Output CSV path")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(integrate)) return run_integrate(in);
        if (app.got_subcommand(figure)) return run_figure(fo);
        if (app.got_subcommand(lipschitz)) return run_lipschitz(lo);
        if (app.got_subcommand(witness)) return run_witness(wo);
        if (app.got_subcommand(converge)) return run_converge(co);
        if (app.got_subcommand(verify)) return run_verify(vo);
    } catch (const DomainEscapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
