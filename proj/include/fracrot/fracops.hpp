#pragma once

// Caputo fractional partial derivatives of series via the termwise power
// rule, plus the two composite terms that appear in the first-order
// rotation law: the transport term D^nu_x I1_x D1_y and the lower-terminal
// term produced by the rotation of the integration terminal (the y-axis).

#include <cmath>

#include "fracrot/fracseries.hpp"
#include "fracrot/specialfn.hpp"

namespace fracrot {

/// D^nu_x of a Taylor series. Interior orders map a_{n,m) with n >= 1 to
/// the monomial coefficient a_{n,m} / (Gamma(n-nu+1) m!) on x^(n-nu) y^m;
/// n = 0 terms are annihilated. nu = 0 is the exact identity, nu = 1 the
/// classical partial derivative.
inline FracSeries frac_dx(const PolySeries& s, FracOrder nu) {
    if (nu.is_zero()) return FracSeries::from_poly(s);
    if (nu.is_one()) return FracSeries::from_poly(partial_x(s));
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs()) {
        if (k.n < 1) continue;
        out.emplace(k, a / (gamma_pos(static_cast<double>(k.n) - nu.value() + 1.0) * factorial(k.m)));
    }
    return FracSeries(-nu.value(), 0.0, std::move(out));
}

inline FracSeries frac_dy(const PolySeries& s, FracOrder nu) {
    return swap_axes(frac_dx(swap_axes(s), nu));
}

/// Power rule on an already-fractional series: c x^p y^q maps to
/// c * Gamma(p+1)/Gamma(p-nu+1) * x^(p-nu) y^q. Terms with p = 0 are
/// annihilated; p in (-1, 0) is outside the rule's domain.
inline FracSeries frac_dx_general(const FracSeries& s, FracOrder nu) {
    if (nu.is_zero()) return s;
    CoeffMap out;
    for (const auto& [k, c] : s.coeffs()) {
        const double p = s.exponent_x(k);
        if (p == 0.0) continue;
        if (p < 0.0)
            throw std::domain_error("frac_dx_general: x-exponent in (-1, 0) has no power rule");
        out.emplace(k, c * caputo_power_coeff(p, nu));
    }
    if (out.empty()) return FracSeries();
    return FracSeries(s.offset_x() - nu.value(), s.offset_y(), std::move(out));
}

inline FracSeries frac_dy_general(const FracSeries& s, FracOrder nu) {
    return swap_axes(frac_dx_general(swap_axes(s), nu));
}

/// Transport term of the x-axis rotation law: D^nu_x I1_x D1_y applied to
/// the series. The composite is nu-independent in shape: the surviving
/// terms are a_{n-1,m+1} x^(n-nu) y^m / (Gamma(n-nu+1) m!).
inline FracSeries transport_term(const PolySeries& s, FracOrder nu) {
    return frac_dx(integrate_x(partial_y(s)), nu);
}

/// y-direction mirror: D^nu_y I1_y D1_x.
inline FracSeries transport_term_y(const PolySeries& s, FracOrder nu) {
    return frac_dy(integrate_y(partial_x(s)), nu);
}

/// Lower-terminal term of the x-axis rotation law. The Caputo integral
/// runs from the y-axis, and that axis moves under rotation; the induced
/// first-order change of the derivative is
///   x^(-nu) * [ x * dPhi/dy(0,y) + y * dPhi/dx(0,y) ] / Gamma(1-nu),
/// i.e. the series  sum_m a_{0,m+1} x^(1-nu) y^m / (Gamma(1-nu) m!)
///                + sum_m a_{1,m}   x^(-nu) y^(m+1) / (Gamma(1-nu) m!).
/// Zero at nu = 1 (the classical derivative is local); the nu = 0 branch
/// of the law never consults it.
inline FracSeries lower_terminal_term(const PolySeries& s, FracOrder nu) {
    if (nu.is_one()) return FracSeries();
    const double g = gamma_pos(1.0 - nu.value());
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs()) {
        if (k.n == 0 && k.m >= 1)
            out[Index2{1, k.m - 1}] += a / (g * factorial(k.m - 1));
        if (k.n == 1)
            out[Index2{0, k.m + 1}] += a / (g * factorial(k.m));
    }
    if (out.empty()) return FracSeries();
    return FracSeries(-nu.value(), 0.0, std::move(out));
}

inline FracSeries lower_terminal_term_y(const PolySeries& s, FracOrder nu) {
    return swap_axes(lower_terminal_term(swap_axes(s), nu));
}

} // namespace fracrot
