#include <doctest.h>

#include <cmath>

#include "fracrot/corpus.hpp"
#include "fracrot/invariants.hpp"

using namespace fracrot;

TEST_SUITE_BEGIN("invariants");

namespace {
PolySeries quadratic_field() {
    return PolySeries::from_taylor({{2, 0, 2.0}, {0, 2, 2.0}});
}
} // namespace

TEST_CASE("weighted gradient of the quadratic field is a multiple of the field") {
    for (double nu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const FracSeries q = weighted_gradient_scalar(quadratic_field(), FracOrder(nu));
        const double want = 2.0 / gamma_pos(3.0 - nu);
        CHECK(q.offset_x() == 0.0);
        CHECK(q.offset_y() == 0.0);
        REQUIRE(q.coeffs().size() == 2);
        CHECK(q.coeff({2, 0}) == doctest::Approx(want).epsilon(1e-13));
        CHECK(q.coeff({0, 2}) == doctest::Approx(want).epsilon(1e-13));
    }
    // classical endpoint: x * 2x + y * 2y
    const FracSeries q1 = weighted_gradient_scalar(quadratic_field(), FracOrder(1.0));
    CHECK(q1.coeff({2, 0}) == 2.0);
    CHECK(q1.coeff({0, 2}) == 2.0);
    CHECK(weighted_gradient_scalar(PolySeries::from_taylor({{0, 0, 4.0}}), FracOrder(0.5)).empty());
}

TEST_CASE("weighted laplacian of the quadratic field") {
    for (double nu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const FracSeries q = weighted_laplacian(quadratic_field(), FracOrder(nu));
        const double want = 2.0 / gamma_pos(3.0 - 2.0 * nu);
        REQUIRE(q.coeffs().size() == 2);
        CHECK(q.coeff({2, 0}) == doctest::Approx(want).epsilon(1e-12));
        CHECK(q.coeff({0, 2}) == doctest::Approx(want).epsilon(1e-12));
    }
    // nu = 0.5: 2/Gamma(2) = 2
    CHECK(weighted_laplacian(quadratic_field(), FracOrder(0.5)).coeff({2, 0}) ==
          doctest::Approx(2.0).epsilon(1e-13));
    // classical endpoint: x^2 * 2 + y^2 * 2
    const FracSeries q1 = weighted_laplacian(quadratic_field(), FracOrder(1.0));
    CHECK(q1.coeff({2, 0}) == 2.0);
    CHECK(q1.coeff({0, 2}) == 2.0);
}

TEST_CASE("unweighted laplacian of the quadratic field") {
    // nu = 0.5: the two halves land on the shared integer lattice: 2x + 2y
    const SeriesSum q = unweighted_laplacian(quadratic_field(), FracOrder(0.5));
    const FracSeries& single = q.as_single();
    CHECK(single.coeff({1, 0}) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(single.coeff({0, 1}) == doctest::Approx(2.0).epsilon(1e-13));

    // generic order: two lattices, x-half with offset -2nu
    const SeriesSum q3 = unweighted_laplacian(quadratic_field(), FracOrder(0.3));
    CHECK(q3.parts().size() == 2);
    CHECK_THROWS_AS(q3.as_single(), std::invalid_argument);
    CHECK(q3.eval({1.0, 1.0}) == doctest::Approx(2.0 * 2.0 / gamma_pos(3.0 - 0.6)).epsilon(1e-12));

    // classical endpoint: the plain laplacian, constant 4
    const SeriesSum q1 = unweighted_laplacian(quadratic_field(), FracOrder(1.0));
    CHECK(q1.as_single().coeff({0, 0}) == 4.0);

    CHECK(unweighted_laplacian(PolySeries::from_taylor({{0, 0, 2.0}}), FracOrder(0.4)).empty());
}

TEST_CASE("weighted quantities are first-order rotation invariant on the quadratic field") {
    const auto grid = default_grid();
    for (double nu : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        for (double dt : {1e-2, 5e-3}) {
            const auto wg = invariance_residual(InvariantKind::weighted_gradient, quadratic_field(),
                                                FracOrder(nu), RotationAngle(dt), grid);
            const auto wl = invariance_residual(InvariantKind::weighted_laplacian, quadratic_field(),
                                                FracOrder(nu), RotationAngle(dt), grid);
            CHECK(wg.max_abs_residual <= 1e-12);
            CHECK(wl.max_abs_residual <= 1e-12);
        }
    }
}

TEST_CASE("unweighted laplacian is not invariant: the defect is first order") {
    const auto grid = default_grid();
    for (double nu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double d1 = 1e-2, d2 = 5e-3;
        const auto r1 = invariance_residual(InvariantKind::unweighted_laplacian, quadratic_field(),
                                            FracOrder(nu), RotationAngle(d1), grid);
        const auto r2 = invariance_residual(InvariantKind::unweighted_laplacian, quadratic_field(),
                                            FracOrder(nu), RotationAngle(d2), grid);
        CHECK(r1.max_abs_residual / d1 >= 0.1);
        const double ratio = (r1.max_abs_residual / d1) / (r2.max_abs_residual / d2);
        CHECK(ratio > 0.9);
        CHECK(ratio < 1.1);
    }
}

TEST_CASE("unweighted defect values match the closed form") {
    // slope(x, y) = 2 (2 - 2nu) / Gamma(3 - 2nu) * (y x^(1-2nu) - x y^(1-2nu));
    // antisymmetric in x <-> y, so it vanishes on the diagonal.
    const auto slope_at = [](double nu, Point2D p) {
        const SeriesSum sl =
            invariance_slope(InvariantKind::unweighted_laplacian, quadratic_field(), FracOrder(nu));
        return sl.eval(p);
    };
    for (double nu : {0.1, 0.3, 0.7, 0.9}) {
        const double want = 2.0 * (2.0 - 2.0 * nu) / gamma_pos(3.0 - 2.0 * nu) *
                            (2.0 * std::pow(1.0, 1.0 - 2.0 * nu) - std::pow(2.0, 1.0 - 2.0 * nu));
        CHECK(slope_at(nu, {1.0, 2.0}) == doctest::Approx(want).epsilon(1e-12));
        CHECK(std::abs(slope_at(nu, {1.0, 1.0})) < 1e-14);
    }
    CHECK(slope_at(0.5, {1.0, 2.0}) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("classical endpoint reductions") {
    // gradient dot position and laplacians of the quadratic field
    const FracSeries wg = weighted_gradient_scalar(quadratic_field(), FracOrder(1.0));
    CHECK(wg.coeff({2, 0}) == 2.0);
    const FracSeries wl = weighted_laplacian(quadratic_field(), FracOrder(1.0));
    CHECK(wl.coeff({2, 0}) == 2.0);
    const SeriesSum ul = unweighted_laplacian(quadratic_field(), FracOrder(1.0));
    CHECK(ul.as_single().coeff({0, 0}) == 4.0);
    // the constant laplacian is trivially invariant
    const auto rep = invariance_residual(InvariantKind::weighted_laplacian, quadratic_field(),
                                         FracOrder(1.0), RotationAngle(0.01), default_grid());
    CHECK(rep.max_abs_residual <= 1e-13);
}

TEST_CASE("general series: residual is reported, not asserted") {
    SplitMix64 rng(19);
    const PolySeries s = random_series(4, rng);
    const auto rep = invariance_residual(InvariantKind::weighted_gradient, s, FracOrder(0.4),
                                         RotationAngle(0.01), default_grid());
    CHECK(rep.point_residuals.size() == default_grid().size());
    CHECK(std::isfinite(rep.max_abs_residual));
}

TEST_CASE("domain errors") {
    const std::vector<Point2D> bad = {{-1.0, 1.0}};
    CHECK_THROWS_AS(invariance_residual(InvariantKind::weighted_gradient, quadratic_field(),
                                        FracOrder(0.5), RotationAngle(0.01), bad),
                    std::domain_error);
    // unweighted laplacian of a series with n = 1 terms: for nu > 1/2 the
    // substituted exponent 1 - 2nu - 1 drops to -1 or below
    const PolySeries with_x = PolySeries::from_taylor({{1, 1, 1.0}});
    CHECK_THROWS_AS(invariance_residual(InvariantKind::unweighted_laplacian, with_x, FracOrder(0.7),
                                        RotationAngle(0.01), default_grid()),
                    std::domain_error);
}

TEST_SUITE_END();
