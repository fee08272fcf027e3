#pragma once

// Scalar-candidate quantities built from fractional derivatives and the
// measurement of their first-order behavior under rotation. Each quantity
// Q is evaluated two ways: directly from the series, and rebuilt from the
// rotated data (rotated coefficients, primed weights) re-expressed at the
// unprimed point. The pointwise difference, linear in dtheta by
// construction, is the invariance defect.

#include <span>
#include <stdexcept>
#include <vector>

#include "fracrot/rotation.hpp"

namespace fracrot {

enum class InvariantKind { weighted_gradient, weighted_laplacian, unweighted_laplacian };

/// x^nu D^nu_x Phi + y^nu D^nu_y Phi. The weight restores integer
/// exponents, so the result lives on the plain lattice.
inline FracSeries weighted_gradient_scalar(const PolySeries& s, FracOrder nu) {
    return lin_comb(1.0, mul_xpow(frac_dx(s, nu), nu.value()),
                    1.0, mul_ypow(frac_dy(s, nu), nu.value()));
}

/// Repeated x-derivative D^nu_x D^nu_x.
inline FracSeries frac_dxx(const PolySeries& s, FracOrder nu) {
    return frac_dx_general(frac_dx(s, nu), nu);
}

inline FracSeries frac_dyy(const PolySeries& s, FracOrder nu) {
    return frac_dy_general(frac_dy(s, nu), nu);
}

/// x^(2nu) D^nu_x D^nu_x Phi + y^(2nu) D^nu_y D^nu_y Phi; integer lattice.
inline FracSeries weighted_laplacian(const PolySeries& s, FracOrder nu) {
    return lin_comb(1.0, mul_xpow(frac_dxx(s, nu), 2.0 * nu.value()),
                    1.0, mul_ypow(frac_dyy(s, nu), 2.0 * nu.value()));
}

/// D^nu_x D^nu_x Phi + D^nu_y D^nu_y Phi. The two halves carry offsets
/// -2nu on different axes, so in general they cannot share one lattice;
/// the result is a sum of (at most two) series.
inline SeriesSum unweighted_laplacian(const PolySeries& s, FracOrder nu) {
    SeriesSum q;
    q.add(frac_dxx(s, nu));
    q.add(frac_dyy(s, nu));
    return q;
}

namespace detail {

inline SeriesSum invariant_series(InvariantKind kind, const PolySeries& s, FracOrder nu) {
    switch (kind) {
        case InvariantKind::weighted_gradient: return SeriesSum(weighted_gradient_scalar(s, nu));
        case InvariantKind::weighted_laplacian: return SeriesSum(weighted_laplacian(s, nu));
        case InvariantKind::unweighted_laplacian: return unweighted_laplacian(s, nu);
    }
    throw std::logic_error("invariant_series: bad kind");
}

} // namespace detail

/// dtheta-slope of Q' (the quantity rebuilt from rotated data, expressed
/// at the unprimed point) minus Q. The residual reported at a grid point
/// is |dtheta * slope(x, y)|.
inline SeriesSum invariance_slope(InvariantKind kind, const PolySeries& s, FracOrder nu) {
    const SeriesSum q0 = detail::invariant_series(kind, s, nu);
    SeriesSum slope = detail::invariant_series(kind, rotation_generator(s), nu);
    for (const FracSeries& part : q0.parts()) slope.add(substitution_generator(part));
    return slope;
}

/// Pointwise first-order invariance defect over the grid.
inline ComparisonReport invariance_residual(InvariantKind kind, const PolySeries& s,
                                            FracOrder nu, RotationAngle dt,
                                            std::span<const Point2D> grid) {
    const SeriesSum slope = invariance_slope(kind, s, nu);
    ComparisonReport rep;
    const SeriesSum q0 = detail::invariant_series(kind, s, nu);
    for (const FracSeries& part : q0.parts()) rep.lhs_terms += part.coeffs().size();
    for (const FracSeries& part : slope.parts()) rep.rhs_terms += part.coeffs().size();
    for (const Point2D& p : grid) {
        if (!(p.x > 0.0 && p.y > 0.0))
            throw std::domain_error("invariance_residual: grid must lie in the open positive quadrant");
        const double r = dt.value() * slope.eval(p);
        rep.point_residuals.emplace_back(p, r);
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(r));
    }
    return rep;
}

/// The module's default evaluation grid, {0.5, 1, 2} x {0.5, 1, 2}.
inline std::vector<Point2D> default_grid() {
    std::vector<Point2D> g;
    for (double x : {0.5, 1.0, 2.0})
        for (double y : {0.5, 1.0, 2.0})
            g.push_back({x, y});
    return g;
}

} // namespace fracrot
