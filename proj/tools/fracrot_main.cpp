// fracrot: fractional-derivative series toolkit.
//
// Subcommands: deriv, verify, invariant, oracle, example, dump.
// All commands emit deterministic CSV (or the coefficient file format for
// dump): fixed row order, 17-significant-digit floats, LF endings. Any
// exceeded tolerance turns into a nonzero exit status.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fracrot/fracrot.hpp"

namespace {

using namespace fracrot;

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary); // binary keeps LF endings everywhere
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        stream = &file;
    }
};

std::vector<Point2D> parse_grid(const std::vector<std::string>& specs) {
    std::vector<Point2D> grid;
    for (const std::string& s : specs) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("grid point '" + s + "' must look like x:y");
        try {
            grid.push_back({std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))});
        } catch (const std::exception&) {
            throw std::runtime_error("grid point '" + s + "' must look like x:y");
        }
    }
    return grid;
}

struct SeriesSource {
    std::string coeff_path;
    std::string mode_name = "taylor";
    int random_degree = -1;
    std::uint64_t seed = 0;

    void add_options(CLI::App* cmd, bool allow_random) {
        auto* coeffs = cmd->add_option("--coeffs", coeff_path, "coefficient file (n m a lines, # comments)");
        cmd->add_option("--mode", mode_name, "coefficient interpretation: taylor|monomial")
            ->check(CLI::IsMember({"taylor", "monomial"}));
        if (allow_random) {
            auto* rnd = cmd->add_option("--random-degree", random_degree,
                                        "use a seeded random series of this total degree instead of a file");
            cmd->add_option("--seed", seed, "seed for random series");
            rnd->excludes(coeffs);
        } else {
            coeffs->required();
        }
    }

    PolySeries load() const {
        if (random_degree >= 0) {
            SplitMix64 rng(seed);
            return random_series(random_degree, rng);
        }
        if (coeff_path.empty())
            throw std::runtime_error("need --coeffs FILE or --random-degree N");
        return read_coeff_file(coeff_path, parse_coeff_mode(mode_name));
    }
};

const char* axis_name(Axis a) { return a == Axis::x ? "x" : "y"; }

// ---------------------------------------------------------------- deriv

int cmd_deriv(const PolySeries& s, const std::vector<double>& nus, std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"nu", "axis", "n", "m", "exponent_x", "exponent_y", "coefficient"});
    for (double nu : nus) {
        const FracOrder order(nu);
        for (Axis axis : {Axis::x, Axis::y}) {
            const FracSeries d = axis == Axis::x ? frac_dx(s, order) : frac_dy(s, order);
            for (const auto& [k, c] : d.coeffs())
                csv.row(nu, axis_name(axis), k.n, k.m, d.exponent_x(k), d.exponent_y(k), c);
        }
    }
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const PolySeries& s, const std::vector<double>& nus,
               const std::vector<double>& dthetas, const std::vector<Point2D>& grid,
               std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"nu", "dtheta", "axis", "max_abs_residual", "exact_rotation_residual", "order_ratio"});
    bool ok = true;
    for (double nu : nus) {
        const FracOrder order(nu);
        for (double dt : dthetas) {
            const RotationAngle angle(dt);
            for (Axis axis : {Axis::x, Axis::y}) {
                const ComparisonReport rep = verify_transformation(s, order, angle, axis);
                const double scale = std::max(1.0, law_scale(s, order, angle, axis));
                if (rep.max_abs_residual > 1e-10 * scale) ok = false;
                const double r1 = exact_rotation_residual(s, order, angle, grid, axis);
                const double r2 = exact_rotation_residual(s, order, RotationAngle(dt / 2.0), grid, axis);
                const double ratio = r1 == 0.0 ? 0.0 : r2 / r1;
                csv.row(nu, dt, axis_name(axis), rep.max_abs_residual, r1, ratio);
            }
        }
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------- invariant

int cmd_invariant(const PolySeries& s, const std::vector<double>& nus,
                  const std::vector<double>& dthetas, const std::vector<Point2D>& grid,
                  std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"kind", "nu", "dtheta", "point_x", "point_y", "residual"});
    const std::pair<InvariantKind, const char*> kinds[] = {
        {InvariantKind::weighted_gradient, "weighted_gradient"},
        {InvariantKind::weighted_laplacian, "weighted_laplacian"},
        {InvariantKind::unweighted_laplacian, "unweighted_laplacian"},
    };
    for (const auto& [kind, name] : kinds) {
        for (double nu : nus) {
            for (double dt : dthetas) {
                const ComparisonReport rep =
                    invariance_residual(kind, s, FracOrder(nu), RotationAngle(dt), grid);
                for (const auto& [p, r] : rep.point_residuals)
                    csv.row(name, nu, dt, p.x, p.y, r);
            }
        }
    }
    return 0;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const PolySeries& s, const std::vector<double>& nus,
               const std::vector<Point2D>& grid, const QuadratureConfig& cfg,
               std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"nu", "x", "y", "series_value", "quadrature_value", "abs_diff"});
    bool ok = true;
    for (double nu : nus) {
        const FracOrder order(nu);
        for (const Point2D& p : grid) {
            if (!(p.x > 0.0)) throw std::runtime_error("oracle grid needs x > 0");
            const double series = eval_frac(frac_dx(s, order), p);
            const double quad = caputo_quadrature_series_x(s, order, p, cfg);
            const double diff = std::abs(series - quad);
            if (diff > 1e-8 * (1.0 + std::abs(series))) ok = false;
            csv.row(nu, p.x, p.y, series, quad, diff);
        }
    }
    return ok ? 0 : 1;
}

// --------------------------------------------------------------- example

// The quadratic field x^2 + y^2: prints, per order, the coefficient of the
// first-order law correction (2/Gamma(2-nu) on x^(1-nu) y for the x-law,
// its negative mirror for the y-law), the verified law residuals, and the
// invariance defects of the three scalar candidates.
int cmd_example(const std::vector<double>& nus, double dt, std::ostream& out) {
    const PolySeries phi = PolySeries::from_taylor({{2, 0, 2.0}, {0, 2, 2.0}});
    const auto grid = default_grid();
    CsvWriter csv(out);
    csv.header({"nu", "correction_coefficient", "net_correction_x", "net_correction_y",
                "law_residual_x", "law_residual_y", "weighted_gradient_residual",
                "weighted_laplacian_residual", "unweighted_residual_per_dtheta"});
    for (double nu : nus) {
        const FracOrder order(nu);
        const RotationAngle angle(dt);
        const double coeff = 2.0 / gamma_pos(2.0 - nu);
        double net_x = 0.0, net_y = 0.0;
        if (nu > 0.0) {
            // measured from the law machinery rather than the closed form;
            // the correction monomial x^(1-nu) y sits at lattice (1,1) for
            // interior orders and at (0,1) once the exponent hits zero
            const FracSeries corr_x = rhs_transformation_law(phi, order, angle) - frac_dx(phi, order);
            const FracSeries corr_y = rhs_transformation_law_y(phi, order, angle) - frac_dy(phi, order);
            net_x = corr_x.coeff(order.is_one() ? Index2{0, 1} : Index2{1, 1}) / dt;
            net_y = corr_y.coeff(order.is_one() ? Index2{1, 0} : Index2{1, 1}) / dt;
        }
        const double res_x = verify_transformation(phi, order, angle, Axis::x).max_abs_residual;
        const double res_y = verify_transformation(phi, order, angle, Axis::y).max_abs_residual;
        const double wg =
            invariance_residual(InvariantKind::weighted_gradient, phi, order, angle, grid).max_abs_residual;
        const double wl =
            invariance_residual(InvariantKind::weighted_laplacian, phi, order, angle, grid).max_abs_residual;
        const double ul =
            invariance_residual(InvariantKind::unweighted_laplacian, phi, order, angle, grid).max_abs_residual;
        csv.row(nu, coeff, net_x, net_y, res_x, res_y, wg, wl, ul / dt);
    }
    return 0;
}

// ------------------------------------------------------------------ dump

int cmd_dump(const PolySeries& s, const std::string& as_mode, std::ostream& out) {
    write_coeff_stream(out, s, parse_coeff_mode(as_mode));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracrot: fractional partial derivatives of bivariate series,\n"
                 "rotation transformation law verification, and scalar invariants"};
    app.require_subcommand(1);

    // shared state, filled per subcommand
    SeriesSource src;
    std::vector<double> nus{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<double> dthetas{1e-2, 5e-3, 2.5e-3};
    std::vector<std::string> grid_spec;
    std::string out_path;
    std::string as_mode = "taylor";
    double example_dt = 1e-2;
    QuadratureConfig qcfg;

    auto add_common = [&](CLI::App* cmd, bool needs_nu) {
        if (needs_nu) cmd->add_option("--nu", nus, "list of fractional orders")->delimiter(',');
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* deriv = app.add_subcommand("deriv", "termwise fractional derivative tables");
    src.add_options(deriv, false);
    add_common(deriv, true);

    CLI::App* verify = app.add_subcommand("verify", "first-order transformation-law sweep");
    src.add_options(verify, true);
    add_common(verify, true);
    verify->add_option("--dtheta", dthetas, "list of rotation angles")->delimiter(',');
    verify->add_option("--grid", grid_spec, "evaluation points x:y for the exact-rotation residual")
        ->delimiter(',');

    CLI::App* invariant = app.add_subcommand("invariant", "scalar-candidate invariance report");
    src.add_options(invariant, false);
    add_common(invariant, true);
    invariant->add_option("--dtheta", dthetas, "list of rotation angles")->delimiter(',');
    invariant->add_option("--grid", grid_spec, "evaluation points x:y")->delimiter(',');

    CLI::App* oracle = app.add_subcommand("oracle", "series derivative vs singular-integral quadrature");
    src.add_options(oracle, false);
    oracle->add_option("--out", out_path, "write output to this file instead of stdout");
    auto* oracle_nu = oracle->add_option("--nu", nus, "list of fractional orders, inside (0,1)")->delimiter(',');
    oracle->add_option("--grid", grid_spec, "evaluation points x:y (x > 0)")->delimiter(',');
    oracle->add_option("--nodes", qcfg.node_count, "Gauss-Legendre nodes per panel");
    oracle->add_option("--panels", qcfg.sub_intervals, "graded panel count");

    CLI::App* example = app.add_subcommand("example", "worked quadratic-field demonstration");
    add_common(example, true);
    example->add_option("--dtheta", example_dt, "rotation angle");

    CLI::App* dump = app.add_subcommand("dump", "re-emit a coefficient file in canonical order");
    src.add_options(dump, false);
    add_common(dump, false);
    dump->add_option("--as", as_mode, "emit taylor|monomial coefficients")
        ->check(CLI::IsMember({"taylor", "monomial"}));

    CLI11_PARSE(app, argc, argv);

    try {
        rotation_convention_self_check();

        OutputTarget target;
        target.open(out_path);
        std::ostream& out = *target.stream;

        std::vector<Point2D> grid = parse_grid(grid_spec);
        if (grid.empty()) grid = default_grid();

        if (deriv->parsed()) return cmd_deriv(src.load(), nus, out);
        if (verify->parsed()) return cmd_verify(src.load(), nus, dthetas, grid, out);
        if (invariant->parsed()) return cmd_invariant(src.load(), nus, dthetas, grid, out);
        if (oracle->parsed()) {
            if (oracle_nu->count() == 0)
                nus = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
            return cmd_oracle(src.load(), nus, grid, qcfg, out);
        }
        if (example->parsed()) return cmd_example(nus, example_dt, out);
        if (dump->parsed()) return cmd_dump(src.load(), as_mode, out);
    } catch (const std::exception& e) {
        std::cerr << "fracrot: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
