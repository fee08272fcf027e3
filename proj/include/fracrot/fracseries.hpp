#pragma once

// Generalized bivariate series whose exponents carry a fixed real offset
// per axis: value(x,y) = sum c_{n,m} x^(n+offset_x) y^(m+offset_y).
// Offsets are normalized into (-1, 0] by shifting the integer lattice,
// so series produced at the same fractional order share one lattice and
// can be added or compared coefficientwise.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "fracrot/poly.hpp"

namespace fracrot {

namespace detail {

// Offsets coming out of the series operations differ either exactly or
// by a fractional amount; this tolerance only absorbs last-bit noise from
// lattice renormalization.
inline constexpr double kOffsetTol = 1e-9;

inline bool offsets_match(double a, double b) {
    return std::abs(a - b) <= kOffsetTol;
}

} // namespace detail

class FracSeries {
public:
    FracSeries() = default;

    /// Takes raw offsets plus monomial coefficients and normalizes:
    /// integer parts of the offsets move into the lattice indices, exact
    /// zeros are dropped. Every resulting exponent must stay > -1.
    FracSeries(double offset_x, double offset_y, CoeffMap coeffs)
        : ox_(offset_x), oy_(offset_y), c_(std::move(coeffs)) {
        normalize_axis(ox_, /*is_x=*/true);
        normalize_axis(oy_, /*is_x=*/false);
        std::erase_if(c_, [](const auto& kv) { return kv.second == 0.0; });
        for (const auto& [k, v] : c_) {
            if (k.n + ox_ <= -1.0 || k.m + oy_ <= -1.0)
                throw std::domain_error("FracSeries: exponent at or below -1");
        }
    }

    static FracSeries from_poly(const PolySeries& s) {
        CoeffMap out;
        for (const auto& [k, a] : s.coeffs())
            out.emplace(k, a / (factorial(k.n) * factorial(k.m)));
        return FracSeries(0.0, 0.0, std::move(out));
    }

    /// Inverse of from_poly; requires both offsets to be exactly zero.
    PolySeries to_poly() const {
        if (ox_ != 0.0 || oy_ != 0.0)
            throw std::invalid_argument("FracSeries::to_poly: nonzero offsets");
        CoeffMap out;
        int deg = 0;
        for (const auto& [k, c] : c_) {
            out.emplace(k, c * factorial(k.n) * factorial(k.m));
            deg = std::max(deg, k.n + k.m);
        }
        return PolySeries::from_map(std::move(out), deg);
    }

    double offset_x() const noexcept { return ox_; }
    double offset_y() const noexcept { return oy_; }
    const CoeffMap& coeffs() const noexcept { return c_; }
    bool empty() const noexcept { return c_.empty(); }

    double coeff(Index2 k) const {
        auto it = c_.find(k);
        return it == c_.end() ? 0.0 : it->second;
    }

    double exponent_x(Index2 k) const noexcept { return static_cast<double>(k.n) + ox_; }
    double exponent_y(Index2 k) const noexcept { return static_cast<double>(k.m) + oy_; }

    double max_abs_coeff() const noexcept {
        double m = 0.0;
        for (const auto& [k, v] : c_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    void normalize_axis(double& offset, bool is_x) {
        if (!std::isfinite(offset))
            throw std::domain_error("FracSeries: non-finite offset");
        if (c_.empty()) { offset = 0.0; return; }
        long k;
        if (std::abs(offset - std::round(offset)) <= detail::kOffsetTol) {
            k = std::lround(offset);
            offset = 0.0;
        } else {
            k = std::lround(std::ceil(offset));
            offset -= static_cast<double>(k);
        }
        if (k == 0) return;
        CoeffMap shifted;
        for (auto& [idx, v] : c_) {
            Index2 nk = idx;
            (is_x ? nk.n : nk.m) += static_cast<int>(k);
            if (nk.n < 0 || nk.m < 0)
                throw std::domain_error("FracSeries: lattice shift below zero index");
            shifted.emplace(nk, v);
        }
        c_ = std::move(shifted);
    }

    double ox_ = 0.0;
    double oy_ = 0.0;
    CoeffMap c_; // monomial coefficients
};

/// ca * a + cb * b on a shared lattice. Adding onto an empty series
/// adopts the other side's offsets; otherwise offsets must agree.
inline FracSeries lin_comb(double ca, const FracSeries& a, double cb, const FracSeries& b) {
    if (a.empty() && b.empty()) return FracSeries();
    if (a.empty()) {
        CoeffMap out;
        for (const auto& [k, v] : b.coeffs()) out.emplace(k, cb * v);
        return FracSeries(b.offset_x(), b.offset_y(), std::move(out));
    }
    if (b.empty()) {
        CoeffMap out;
        for (const auto& [k, v] : a.coeffs()) out.emplace(k, ca * v);
        return FracSeries(a.offset_x(), a.offset_y(), std::move(out));
    }
    if (!detail::offsets_match(a.offset_x(), b.offset_x()) ||
        !detail::offsets_match(a.offset_y(), b.offset_y()))
        throw std::invalid_argument("FracSeries: lattice mismatch in addition");
    CoeffMap out;
    for (const auto& [k, v] : a.coeffs()) out[k] += ca * v;
    for (const auto& [k, v] : b.coeffs()) out[k] += cb * v;
    return FracSeries(a.offset_x(), a.offset_y(), std::move(out));
}

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) { return lin_comb(1.0, a, 1.0, b); }
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) { return lin_comb(1.0, a, -1.0, b); }

inline FracSeries scale(const FracSeries& a, double c) {
    if (a.empty() || c == 0.0) return FracSeries();
    CoeffMap out;
    for (const auto& [k, v] : a.coeffs()) out.emplace(k, c * v);
    return FracSeries(a.offset_x(), a.offset_y(), std::move(out));
}

/// Multiply by x^t; the offset gains t and renormalizes onto the lattice.
inline FracSeries mul_xpow(const FracSeries& a, double t) {
    if (a.empty()) return a;
    return FracSeries(a.offset_x() + t, a.offset_y(), CoeffMap(a.coeffs()));
}

inline FracSeries mul_ypow(const FracSeries& a, double t) {
    if (a.empty()) return a;
    return FracSeries(a.offset_x(), a.offset_y() + t, CoeffMap(a.coeffs()));
}

inline FracSeries swap_axes(const FracSeries& a) {
    CoeffMap out;
    for (const auto& [k, v] : a.coeffs()) out.emplace(Index2{k.m, k.n}, v);
    return FracSeries(a.offset_y(), a.offset_x(), std::move(out));
}

/// Evaluate at a point. An axis whose exponents are all non-negative
/// integers accepts any real coordinate; otherwise the coordinate must
/// be strictly positive.
inline double eval_frac(const FracSeries& s, Point2D p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::domain_error("eval_frac: non-finite point");
    const bool frac_x = s.offset_x() != 0.0;
    const bool frac_y = s.offset_y() != 0.0;
    if (frac_x && p.x <= 0.0)
        throw std::domain_error("eval_frac: x must be > 0 for fractional x-exponents");
    if (frac_y && p.y <= 0.0)
        throw std::domain_error("eval_frac: y must be > 0 for fractional y-exponents");
    double acc = 0.0;
    for (const auto& [k, c] : s.coeffs()) {
        const double px = frac_x ? std::pow(p.x, s.exponent_x(k)) : detail::powi(p.x, k.n);
        const double py = frac_y ? std::pow(p.y, s.exponent_y(k)) : detail::powi(p.y, k.m);
        acc += c * px * py;
    }
    return acc;
}

/// Sum of series on possibly incompatible lattices (e.g. the two halves
/// of an unweighted fractional Laplacian carry different per-axis
/// offsets). Parts that share a lattice are merged on insertion.
class SeriesSum {
public:
    SeriesSum() = default;
    explicit SeriesSum(FracSeries s) { add(std::move(s)); }

    void add(FracSeries s, double factor = 1.0) {
        if (factor != 1.0) s = scale(s, factor);
        if (s.empty()) return;
        for (auto it = parts_.begin(); it != parts_.end(); ++it) {
            if (detail::offsets_match(it->offset_x(), s.offset_x()) &&
                detail::offsets_match(it->offset_y(), s.offset_y())) {
                *it = lin_comb(1.0, *it, 1.0, s);
                if (it->empty()) parts_.erase(it); // exact cancellation
                return;
            }
        }
        parts_.push_back(std::move(s));
    }

    const std::vector<FracSeries>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Single-lattice view; throws if the sum genuinely needs two lattices.
    const FracSeries& as_single() const {
        static const FracSeries zero;
        if (parts_.empty()) return zero;
        if (parts_.size() > 1)
            throw std::invalid_argument("SeriesSum: parts live on incompatible lattices");
        return parts_.front();
    }

    double eval(Point2D p) const {
        double acc = 0.0;
        for (const FracSeries& s : parts_) acc += eval_frac(s, p);
        return acc;
    }

    double max_abs_coeff() const noexcept {
        double m = 0.0;
        for (const FracSeries& s : parts_) m = std::max(m, s.max_abs_coeff());
        return m;
    }

private:
    std::vector<FracSeries> parts_;
};

} // namespace fracrot
