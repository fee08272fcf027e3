#pragma once

// Truncated bivariate Taylor series. Canonical storage is the Taylor
// coefficient a_{n,m} (the mixed partial at the origin); the series value
// is sum a_{n,m} x^n y^m / (n! m!). Coefficient maps are sparse, ordered
// by total degree then by n, which fixes the iteration order used for
// deterministic output.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracrot/specialfn.hpp"

namespace fracrot {

struct Index2 {
    int n = 0;
    int m = 0;
    friend bool operator==(Index2 a, Index2 b) noexcept { return a.n == b.n && a.m == b.m; }
};

/// Ordering: total degree ascending, then n ascending.
struct DegreeOrder {
    bool operator()(Index2 a, Index2 b) const noexcept {
        const int da = a.n + a.m, db = b.n + b.m;
        if (da != db) return da < db;
        return a.n < b.n;
    }
};

using CoeffMap = std::map<Index2, double, DegreeOrder>;

struct Term {
    int n = 0;
    int m = 0;
    double value = 0.0;
};

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

namespace detail {

// x^k for integer k >= 0 by repeated multiplication.
inline double powi(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace detail

class PolySeries {
public:
    PolySeries() = default;

    /// Build from Taylor coefficients a_{n,m}. Duplicate or negative
    /// indices are construction errors; zero entries still count toward
    /// the degree bound but are not stored.
    static PolySeries from_taylor(std::span<const Term> terms) {
        PolySeries s;
        for (const Term& t : terms) {
            if (t.n < 0 || t.m < 0)
                throw std::invalid_argument("PolySeries: negative index");
            if (!s.coeffs_.emplace(Index2{t.n, t.m}, t.value).second)
                throw std::invalid_argument("PolySeries: duplicate index");
            s.max_degree_ = std::max(s.max_degree_, t.n + t.m);
        }
        s.drop_zeros();
        return s;
    }

    static PolySeries from_taylor(std::initializer_list<Term> terms) {
        return from_taylor(std::span<const Term>(terms.begin(), terms.size()));
    }

    /// Build from monomial coefficients c_{n,m}; stores a_{n,m} = c * n! m!.
    static PolySeries from_monomials(std::span<const Term> terms) {
        std::vector<Term> taylor(terms.begin(), terms.end());
        for (Term& t : taylor) {
            if (t.n < 0 || t.m < 0)
                throw std::invalid_argument("PolySeries: negative index");
            t.value *= factorial(t.n) * factorial(t.m);
        }
        return from_taylor(taylor);
    }

    static PolySeries from_monomials(std::initializer_list<Term> terms) {
        return from_monomials(std::span<const Term>(terms.begin(), terms.size()));
    }

    int max_total_degree() const noexcept { return max_degree_; }
    const CoeffMap& coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }

    double taylor_coeff(Index2 k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? 0.0 : it->second;
    }

    /// Monomial view: a_{n,m} / (n! m!).
    double monomial_coeff(Index2 k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? 0.0 : it->second / (factorial(k.n) * factorial(k.m));
    }

    double eval(Point2D p) const {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::domain_error("PolySeries::eval: non-finite point");
        double acc = 0.0;
        for (const auto& [k, a] : coeffs_)
            acc += a / (factorial(k.n) * factorial(k.m)) * detail::powi(p.x, k.n) * detail::powi(p.y, k.m);
        return acc;
    }

    // Internal constructor for operation results; degree bound supplied by
    // the operation's truncation policy.
    static PolySeries from_map(CoeffMap m, int degree) {
        PolySeries s;
        s.coeffs_ = std::move(m);
        s.max_degree_ = degree;
        s.drop_zeros();
        return s;
    }

private:
    void drop_zeros() {
        std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0.0; });
    }

    int max_degree_ = 0;
    CoeffMap coeffs_;
};

/// d/dx: a'_{n,m} = a_{n+1,m}.
inline PolySeries partial_x(const PolySeries& s) {
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs())
        if (k.n >= 1) out.emplace(Index2{k.n - 1, k.m}, a);
    return PolySeries::from_map(std::move(out), std::max(0, s.max_total_degree() - 1));
}

/// d/dy: a'_{n,m} = a_{n,m+1}.
inline PolySeries partial_y(const PolySeries& s) {
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs())
        if (k.m >= 1) out.emplace(Index2{k.n, k.m - 1}, a);
    return PolySeries::from_map(std::move(out), std::max(0, s.max_total_degree() - 1));
}

/// Unit integral from 0 along x: a'_{n+1,m} = a_{n,m}.
inline PolySeries integrate_x(const PolySeries& s) {
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs())
        out.emplace(Index2{k.n + 1, k.m}, a);
    return PolySeries::from_map(std::move(out), s.max_total_degree() + 1);
}

/// Unit integral from 0 along y.
inline PolySeries integrate_y(const PolySeries& s) {
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs())
        out.emplace(Index2{k.n, k.m + 1}, a);
    return PolySeries::from_map(std::move(out), s.max_total_degree() + 1);
}

/// Exchange the roles of x and y.
inline PolySeries swap_axes(const PolySeries& s) {
    CoeffMap out;
    for (const auto& [k, a] : s.coeffs())
        out.emplace(Index2{k.m, k.n}, a);
    return PolySeries::from_map(std::move(out), s.max_total_degree());
}

/// ca * a + cb * b, coefficientwise.
inline PolySeries lin_comb(double ca, const PolySeries& a, double cb, const PolySeries& b) {
    CoeffMap out;
    for (const auto& [k, v] : a.coeffs()) out[k] += ca * v;
    for (const auto& [k, v] : b.coeffs()) out[k] += cb * v;
    return PolySeries::from_map(std::move(out), std::max(a.max_total_degree(), b.max_total_degree()));
}

} // namespace fracrot
