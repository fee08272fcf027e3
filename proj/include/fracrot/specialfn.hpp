#pragma once

// Gamma function on the positive real axis and the power-rule coefficient
// of the Caputo derivative, Gamma(p+1)/Gamma(p-alpha+1).

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracrot {

namespace detail {

// Lanczos approximation, g = 7, 9 terms. Relative error stays below
// 4e-14 on (0, 50]; poles and negative arguments are rejected upstream.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace detail

/// Gamma(x) for x > 0. Throws std::domain_error on non-positive or
/// non-finite input; overflows to +inf for x beyond ~171.6.
inline double gamma_pos(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("gamma_pos: argument must be a positive finite real");
    const double z = x - 1.0;
    double sum = detail::kLanczos[0];
    for (int k = 1; k < 9; ++k)
        sum += detail::kLanczos[k] / (z + static_cast<double>(k));
    const double t = z + detail::kLanczosG + 0.5;
    // sqrt(2*pi) * t^(z+0.5) * exp(-t) * S(z)
    return 2.5066282746310002 * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

/// n! as a double; exact for n <= 22, throws past the double range.
inline double factorial(int n) {
    static const auto table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    if (n < 0) throw std::domain_error("factorial: negative argument");
    if (n > 170) throw std::domain_error("factorial: overflow past 170!");
    return table[static_cast<std::size_t>(n)];
}

/// Fractional order nu in [0, 1]. nu = 0 is the identity, nu = 1 the
/// classical partial derivative; both endpoints are handled as exact
/// branches everywhere, never as limits of the Gamma-ratio formula.
class FracOrder {
public:
    explicit FracOrder(double nu) : nu_(nu) {
        if (!(nu >= 0.0 && nu <= 1.0))
            throw std::domain_error("FracOrder: order must lie in [0, 1]");
    }
    double value() const noexcept { return nu_; }
    bool is_zero() const noexcept { return nu_ == 0.0; }
    bool is_one() const noexcept { return nu_ == 1.0; }
    bool is_interior() const noexcept { return nu_ > 0.0 && nu_ < 1.0; }

private:
    double nu_;
};

/// Coefficient of the fractional power rule: x^p maps to coeff * x^(p-alpha).
/// Returns Gamma(p+1)/Gamma(p-alpha+1) for p > 0, 0 for p = 0 (constants
/// are annihilated), p at alpha = 1 (classical rule) and 1 at alpha = 0
/// (identity). p must be non-negative.
inline double caputo_power_coeff(double p, FracOrder alpha) {
    if (!(p >= 0.0))
        throw std::domain_error("caputo_power_coeff: exponent p must be >= 0");
    if (alpha.is_zero()) return 1.0;
    if (alpha.is_one()) return p;
    if (p == 0.0) return 0.0;
    return gamma_pos(p + 1.0) / gamma_pos(p - alpha.value() + 1.0);
}

} // namespace fracrot
