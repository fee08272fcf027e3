#pragma once

// Independent oracle for the Caputo derivative via its integral
// definition (lower terminal 0, order in (0,1)):
//   D^a f(x) = 1/Gamma(1-a) * int_0^x (x-u)^(-a) f'(u) du.
// The substitution w = (x-u)^(1-a) removes the endpoint singularity:
//   D^a f(x) = 1/Gamma(2-a) * int_0^W f'(x - w^(1/(1-a))) dw,  W = x^(1-a).
// The transformed integrand still has an algebraic kink at w = 0 (it is
// only C^floor(1/(1-a)) there), so the interval is split into panels
// graded geometrically toward 0 and Gauss-Legendre is applied per panel.

#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "fracrot/poly.hpp"
#include "fracrot/specialfn.hpp"

namespace fracrot {

struct QuadratureConfig {
    int node_count = 64;    // Gauss-Legendre nodes per panel
    int sub_intervals = 8;  // geometrically graded panels
    double grading = 0.2;   // panel-length ratio toward the singular end
};

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on
/// the Legendre recurrence. Symmetric pairs share one solve.
inline std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 2) throw std::domain_error("gauss_legendre: need at least 2 nodes");
    std::vector<std::pair<double, double>> nw(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess for the i-th root of P_n
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nw[static_cast<std::size_t>(i)] = {x, w};
        nw[static_cast<std::size_t>(n - 1 - i)] = {-x, w};
    }
    return nw;
}

/// Caputo derivative of order alpha in (0,1) at x > 0, given the
/// derivative f' of a continuously differentiable f on [0, x].
inline double caputo_quadrature(const std::function<double(double)>& f_prime,
                                FracOrder alpha, double x,
                                const QuadratureConfig& cfg = {}) {
    if (!alpha.is_interior())
        throw std::domain_error("caputo_quadrature: order must lie strictly inside (0, 1)");
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("caputo_quadrature: x must be > 0");
    if (cfg.node_count < 2 || cfg.sub_intervals < 1 || !(cfg.grading > 0.0 && cfg.grading < 1.0))
        throw std::domain_error("caputo_quadrature: bad quadrature config");

    const double a = alpha.value();
    const double W = std::pow(x, 1.0 - a);
    const double s = 1.0 / (1.0 - a);
    const auto nw = gauss_legendre(cfg.node_count);

    // panel edges: 0, W g^(K-1), ..., W g, W
    std::vector<double> edges(static_cast<std::size_t>(cfg.sub_intervals) + 1);
    edges[0] = 0.0;
    for (int k = 0; k < cfg.sub_intervals; ++k)
        edges[static_cast<std::size_t>(cfg.sub_intervals - k)] = W * std::pow(cfg.grading, k);

    double total = 0.0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double halfw = 0.5 * (edges[p + 1] - edges[p]);
        double panel = 0.0;
        for (const auto& [t, w] : nw) {
            const double u = mid + halfw * t;
            panel += w * f_prime(x - std::pow(u, s));
        }
        total += halfw * panel;
    }
    return total / gamma_pos(2.0 - a);
}

/// Oracle for D^nu_x of a bivariate series at (x, y): integrates the
/// x-section u -> s(u, y) with its exact derivative.
inline double caputo_quadrature_series_x(const PolySeries& s, FracOrder alpha,
                                         Point2D p, const QuadratureConfig& cfg = {}) {
    const PolySeries dsdx = partial_x(s);
    return caputo_quadrature([&](double u) { return dsdx.eval({u, p.y}); }, alpha, p.x, cfg);
}

} // namespace fracrot
