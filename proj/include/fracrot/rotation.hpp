#pragma once

// Rotation of series coefficients and the executable first-order
// transformation law for Caputo fractional partial derivatives.
//
// Conventions, fixed once: the infinitesimal map is
//   x' = x + dtheta * y,   y' = y - dtheta * x,
// the finite rotation linearizing to it is
//   x' = x cos(t) + y sin(t),   y' = -x sin(t) + y cos(t),
// and scalar fields transform by Phi'(x', y') = Phi(x, y), i.e. the
// coefficient map is the generator  L a_{n,m} = n a_{n-1,m+1} - m a_{n+1,m-1}.
// Sanity anchor: Phi = x must pick up a'_{0,1} = -dtheta.
//
// Both sides of the law are assembled as (value, slope) pairs in dtheta
// with every dtheta^2 cross term dropped, so when the law holds the
// coefficientwise residual is pure rounding noise.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracrot/fracops.hpp"

namespace fracrot {

class RotationAngle {
public:
    explicit RotationAngle(double radians) : dt_(radians) {
        if (!std::isfinite(radians))
            throw std::domain_error("RotationAngle: non-finite angle");
    }
    double value() const noexcept { return dt_; }

private:
    double dt_;
};

/// Coefficientwise (or pointwise) residual between two quantities.
struct ComparisonReport {
    double max_abs_residual = 0.0;
    CoeffMap residuals;                                  // term-keyed comparisons
    std::vector<std::pair<Point2D, double>> point_residuals; // grid comparisons
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
};

/// Generator of the coefficient rotation: (L a)_{n,m} = n a_{n-1,m+1} - m a_{n+1,m-1}.
inline PolySeries rotation_generator(const PolySeries& s) {
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs()) {
        // a_{n,m} feeds targets (n+1, m-1) and (n-1, m+1)
        if (k.m >= 1) out[Index2{k.n + 1, k.m - 1}] += static_cast<double>(k.n + 1) * a;
        if (k.n >= 1) out[Index2{k.n - 1, k.m + 1}] -= static_cast<double>(k.m + 1) * a;
    }
    return PolySeries::from_map(std::move(out), s.max_total_degree());
}

/// a'_{n,m} = a_{n,m} + dtheta * (L a)_{n,m}; total degree preserved.
inline PolySeries rotate_coeffs_first_order(const PolySeries& s, RotationAngle dt) {
    return lin_comb(1.0, s, dt.value(), rotation_generator(s));
}

/// Coefficients of Phi composed with the inverse finite rotation,
/// computed by binomial expansion of the substituted monomials.
inline PolySeries rotate_coeffs_exact(const PolySeries& s, double theta) {
    const double c = std::cos(theta), sn = std::sin(theta);
    // binomial table up to the series degree
    const int deg = s.max_total_degree();
    std::vector<std::vector<double>> binom(static_cast<std::size_t>(deg) + 1);
    for (int n = 0; n <= deg; ++n) {
        binom[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 1.0);
        for (int i = 1; i < n; ++i)
            binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] =
                binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)] +
                binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
    }
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs()) {
        const double cm = a / (factorial(k.n) * factorial(k.m)); // monomial coefficient
        // (u c - v sn)^n (u sn + v c)^m
        for (int i = 0; i <= k.n; ++i) {
            for (int j = 0; j <= k.m; ++j) {
                const double coef = cm *
                    binom[static_cast<std::size_t>(k.n)][static_cast<std::size_t>(i)] *
                    binom[static_cast<std::size_t>(k.m)][static_cast<std::size_t>(j)] *
                    detail::powi(c, i) * detail::powi(-sn, k.n - i) *
                    detail::powi(sn, j) * detail::powi(c, k.m - j);
                out[Index2{i + j, (k.n - i) + (k.m - j)}] += coef;
            }
        }
    }
    // back to Taylor coefficients
    for (auto& [k, v] : out) v *= factorial(k.n) * factorial(k.m);
    return PolySeries::from_map(std::move(out), deg);
}

/// Startup assertion of the sign convention: rotating the field x by
/// dtheta must produce x - dtheta * y (so the rotated series takes the old
/// value at the rotated point), and the finite rotation must linearize
/// the same way.
inline void rotation_convention_self_check() {
    const PolySeries x_field = PolySeries::from_taylor({{1, 0, 1.0}});
    const PolySeries first = rotate_coeffs_first_order(x_field, RotationAngle(0.25));
    if (first.taylor_coeff({1, 0}) != 1.0 || first.taylor_coeff({0, 1}) != -0.25)
        throw std::logic_error("rotation sign convention violated (first-order map)");
    const PolySeries finite = rotate_coeffs_exact(x_field, 0.1);
    if (!(finite.taylor_coeff({0, 1}) < 0.0 && finite.taylor_coeff({1, 0}) > 0.9))
        throw std::logic_error("rotation sign convention violated (finite map)");
}

/// dtheta-slope of substituting x -> x + dtheta y, y -> y - dtheta x into
/// a fractional series: x^p y^q contributes p x^(p-1) y^(q+1) - q x^(p+1) y^(q-1).
inline FracSeries substitution_generator(const FracSeries& s) {
    if (s.empty()) return FracSeries();
    CoeffMap out;
    for (const auto& [k, c] : s.coeffs()) {
        const double p = s.exponent_x(k);
        const double q = s.exponent_y(k);
        // Offsets are canonical in (-1, 0], so a lattice-0 term with a
        // nonzero exponent has a negative one: its image would leave the
        // representable range. Everything else stays on the same lattice.
        if (p != 0.0) {
            if (p < 0.0)
                throw std::domain_error("substitution: x-exponent would fall to -1 or below");
            out[Index2{k.n - 1, k.m + 1}] += c * p;
        }
        if (q != 0.0) {
            if (q < 0.0)
                throw std::domain_error("substitution: y-exponent would fall to -1 or below");
            out[Index2{k.n + 1, k.m - 1}] -= c * q;
        }
    }
    if (out.empty()) return FracSeries();
    return FracSeries(s.offset_x(), s.offset_y(), std::move(out));
}

/// x^p y^q -> x^p y^q + dtheta * (p x^(p-1) y^(q+1) - q x^(p+1) y^(q-1)).
inline FracSeries substitute_rotated_first_order(const FracSeries& s, RotationAngle dt) {
    return lin_comb(1.0, s, dt.value(), substitution_generator(s));
}

namespace detail {

/// dtheta-slope of the transformed x-derivative expressed at (x, y):
/// D^nu_x applied to the coefficient generator plus the substitution
/// generator applied to D^nu_x of the series.
inline FracSeries lhs_slope_x(const PolySeries& s, FracOrder nu) {
    const FracSeries base = frac_dx(s, nu);
    return lin_comb(1.0, frac_dx(rotation_generator(s), nu), 1.0, substitution_generator(base));
}

/// dtheta-slope of the law's right-hand side: nu * transport + terminal.
inline FracSeries rhs_slope_x(const PolySeries& s, FracOrder nu) {
    return lin_comb(nu.value(), transport_term(s, nu), 1.0, lower_terminal_term(s, nu));
}

} // namespace detail

/// Transformed derivative D^nu_{x'} Phi'(x', y') expressed at (x, y) to
/// first order: the rotated coefficients are differentiated and the primed
/// coordinates substituted back, with all dtheta^2 cross terms dropped.
/// nu = 0 collapses to the series itself (rotation and substitution are
/// inverse first-order maps).
inline FracSeries lhs_transformed(const PolySeries& s, FracOrder nu, RotationAngle dt) {
    if (nu.is_zero()) return FracSeries::from_poly(s);
    return lin_comb(1.0, frac_dx(s, nu), dt.value(), detail::lhs_slope_x(s, nu));
}

/// Right-hand side of the first-order transformation law for the x-axis:
///   D^nu_x Phi + dtheta * ( nu * D^nu_x I1_x D1_y Phi + terminal term ).
/// Endpoints: nu = 0 gives the series unchanged, nu = 1 the classical
/// gradient law D1_x Phi + dtheta D1_y Phi.
inline FracSeries rhs_transformation_law(const PolySeries& s, FracOrder nu, RotationAngle dt) {
    if (nu.is_zero()) return FracSeries::from_poly(s);
    if (nu.is_one())
        return lin_comb(1.0, FracSeries::from_poly(partial_x(s)),
                        dt.value(), FracSeries::from_poly(partial_y(s)));
    return lin_comb(1.0, frac_dx(s, nu), dt.value(), detail::rhs_slope_x(s, nu));
}

/// y-axis mirror, via the axis swap x <-> y, dtheta -> -dtheta:
///   D^nu_y Phi - dtheta * ( nu * D^nu_y I1_y D1_x Phi + terminal mirror ).
inline FracSeries lhs_transformed_y(const PolySeries& s, FracOrder nu, RotationAngle dt) {
    return swap_axes(lhs_transformed(swap_axes(s), nu, RotationAngle(-dt.value())));
}

inline FracSeries rhs_transformation_law_y(const PolySeries& s, FracOrder nu, RotationAngle dt) {
    return swap_axes(rhs_transformation_law(swap_axes(s), nu, RotationAngle(-dt.value())));
}

enum class Axis { x, y };

/// Coefficientwise residual between the two sides of the transformation
/// law on the shared canonical lattice. The law is an identity, so the
/// residual is rounding noise; dtheta = 0 gives exactly zero.
inline ComparisonReport verify_transformation(const PolySeries& s, FracOrder nu,
                                              RotationAngle dt, Axis axis) {
    const FracSeries lhs = axis == Axis::x ? lhs_transformed(s, nu, dt) : lhs_transformed_y(s, nu, dt);
    const FracSeries rhs = axis == Axis::x ? rhs_transformation_law(s, nu, dt)
                                           : rhs_transformation_law_y(s, nu, dt);
    if (!lhs.empty() && !rhs.empty() &&
        (!detail::offsets_match(lhs.offset_x(), rhs.offset_x()) ||
         !detail::offsets_match(lhs.offset_y(), rhs.offset_y())))
        throw std::invalid_argument("verify_transformation: sides landed on different lattices");
    ComparisonReport rep;
    rep.lhs_terms = lhs.coeffs().size();
    rep.rhs_terms = rhs.coeffs().size();
    CoeffMap keys;
    for (const auto& [k, v] : lhs.coeffs()) keys[k] = 0.0;
    for (const auto& [k, v] : rhs.coeffs()) keys[k] = 0.0;
    for (const auto& [k, unused] : keys) {
        const double r = lhs.coeff(k) - rhs.coeff(k);
        rep.residuals[k] = r;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(r));
    }
    return rep;
}

/// Max-abs scale of the two sides of the law, for relative residual tests.
inline double law_scale(const PolySeries& s, FracOrder nu, RotationAngle dt, Axis axis) {
    const FracSeries lhs = axis == Axis::x ? lhs_transformed(s, nu, dt) : lhs_transformed_y(s, nu, dt);
    return std::max(lhs.max_abs_coeff(), 1e-300);
}

/// Pointwise value of the truly transformed derivative, with no
/// first-order truncation anywhere: the coefficients are rotated by the
/// exact finite rotation and the resulting fractional series is evaluated
/// at the exactly rotated point. Differs from the first-order law by
/// O(dtheta^2).
inline double transformed_derivative_exact(const PolySeries& s, FracOrder nu,
                                           double theta, Point2D p, Axis axis) {
    const PolySeries rot = rotate_coeffs_exact(s, theta);
    const Point2D pr{p.x * std::cos(theta) + p.y * std::sin(theta),
                     -p.x * std::sin(theta) + p.y * std::cos(theta)};
    if (axis == Axis::x) return eval_frac(frac_dx(rot, nu), pr);
    return eval_frac(frac_dy(rot, nu), pr);
}

/// Max over the grid of |exact transformed derivative - first-order law|.
/// Shrinks by ~1/4 when dtheta is halved.
inline double exact_rotation_residual(const PolySeries& s, FracOrder nu, RotationAngle dt,
                                      std::span<const Point2D> grid, Axis axis) {
    const FracSeries rhs = axis == Axis::x ? rhs_transformation_law(s, nu, dt)
                                           : rhs_transformation_law_y(s, nu, dt);
    const double theta = dt.value();
    const PolySeries rot = rotate_coeffs_exact(s, theta);
    const FracSeries drot = axis == Axis::x ? frac_dx(rot, nu) : frac_dy(rot, nu);
    const double c = std::cos(theta), sn = std::sin(theta);
    double worst = 0.0;
    for (const Point2D& p : grid) {
        if (!(p.x > 0.0 && p.y > 0.0))
            throw std::domain_error("exact_rotation_residual: grid must lie in the open positive quadrant");
        const Point2D pr{p.x * c + p.y * sn, -p.x * sn + p.y * c};
        worst = std::max(worst, std::abs(eval_frac(drot, pr) - eval_frac(rhs, p)));
    }
    return worst;
}

} // namespace fracrot
