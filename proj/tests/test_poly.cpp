#include <doctest.h>

#include <cmath>

#include "fracrot/corpus.hpp"
#include "fracrot/poly.hpp"

using namespace fracrot;

TEST_SUITE_BEGIN("poly");

namespace {
// The running example field x^2 + y^2: a_{2,0} = a_{0,2} = 2.
PolySeries quadratic_field() {
    return PolySeries::from_taylor({{2, 0, 2.0}, {0, 2, 2.0}});
}
} // namespace

TEST_CASE("construction from taylor coefficients") {
    const PolySeries s = quadratic_field();
    CHECK(s.max_total_degree() == 2);
    CHECK(s.taylor_coeff({2, 0}) == 2.0);
    CHECK(s.taylor_coeff({0, 2}) == 2.0);
    CHECK(s.taylor_coeff({1, 1}) == 0.0);

    const PolySeries zero = PolySeries::from_taylor({});
    CHECK(zero.empty());
    CHECK(zero.max_total_degree() == 0);

    const PolySeries c = PolySeries::from_taylor({{0, 0, 3.25}});
    CHECK(c.eval({7.0, -2.0}) == 3.25);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(PolySeries::from_taylor({{1, 0, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PolySeries::from_taylor({{-1, 0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PolySeries::from_monomials({{0, -2, 1.0}}), std::invalid_argument);
}

TEST_CASE("monomial constructor converts by factorials") {
    const PolySeries s = PolySeries::from_monomials({{2, 0, 1.0}, {0, 2, 1.0}});
    CHECK(s.taylor_coeff({2, 0}) == 2.0);
    CHECK(s.taylor_coeff({0, 2}) == 2.0);
    CHECK(PolySeries::from_monomials({{1, 1, 3.0}}).taylor_coeff({1, 1}) == 3.0);
    CHECK(PolySeries::from_monomials({{3, 0, 1.0}}).taylor_coeff({3, 0}) == 6.0);
}

TEST_CASE("evaluation") {
    const PolySeries s = quadratic_field();
    CHECK(s.eval({1.0, 1.0}) == doctest::Approx(2.0));
    CHECK(s.eval({3.0, 4.0}) == doctest::Approx(25.0));
    CHECK(PolySeries().eval({0.3, -9.0}) == 0.0);
    CHECK_THROWS_AS(s.eval({std::numeric_limits<double>::infinity(), 0.0}), std::domain_error);
}

TEST_CASE("partial derivatives shift indices") {
    const PolySeries s = quadratic_field();
    const PolySeries dy = partial_y(s);
    CHECK(dy.taylor_coeff({0, 1}) == 2.0);
    CHECK(dy.coeffs().size() == 1);
    CHECK(dy.max_total_degree() == 1);

    const PolySeries dx = partial_x(s);
    CHECK(dx.taylor_coeff({1, 0}) == 2.0);
    CHECK(dx.coeffs().size() == 1);

    CHECK(partial_y(PolySeries::from_taylor({{0, 0, 5.0}})).empty());
    CHECK(partial_x(PolySeries()).empty());
    CHECK(partial_y(PolySeries::from_taylor({{1, 2, 1.0}})).taylor_coeff({1, 1}) == 1.0);
    CHECK(partial_x(PolySeries::from_taylor({{2, 1, 1.0}})).taylor_coeff({1, 1}) == 1.0);
}

TEST_CASE("unit integral shifts up") {
    const PolySeries two_y = PolySeries::from_taylor({{0, 1, 2.0}});
    const PolySeries xy = integrate_x(two_y);
    CHECK(xy.taylor_coeff({1, 1}) == 2.0);
    CHECK(xy.max_total_degree() == 2);

    const PolySeries one = PolySeries::from_taylor({{0, 0, 1.0}});
    CHECK(integrate_x(one).taylor_coeff({1, 0}) == 1.0);
    CHECK(integrate_x(PolySeries()).empty());
}

TEST_CASE("derivative undoes the unit integral exactly") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const PolySeries s = random_series(6, rng);
        const PolySeries back = partial_x(integrate_x(s));
        CHECK(back.coeffs().size() == s.coeffs().size());
        for (const auto& [k, a] : s.coeffs()) CHECK(back.taylor_coeff(k) == a);
    }
}

TEST_CASE("integral matches the analytic antiderivative of monomials") {
    for (int n = 0; n <= 9; ++n) {
        const PolySeries xn = PolySeries::from_monomials({{n, 0, 1.0}});
        const PolySeries integrated = integrate_x(xn);
        for (double x : {0.3, 1.0, 2.5}) {
            const double want = std::pow(x, n + 1) / (n + 1);
            CHECK(integrated.eval({x, 0.7}) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("evaluation is linear") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const PolySeries s = random_series(5, rng);
        const PolySeries t = random_series(4, rng);
        const double a = rng.uniform_sym() * 3.0, b = rng.uniform_sym() * 3.0;
        const Point2D p{rng.uniform01() * 2.0, rng.uniform01() * 2.0};
        const double lhs = lin_comb(a, s, b, t).eval(p);
        const double rhs = a * s.eval(p) + b * t.eval(p);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("monomial round trip is exact for integer coefficients") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.below(13));
        const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(13 - n)));
        const double c = static_cast<double>(static_cast<int>(rng.below(201)) - 100);
        const PolySeries s = PolySeries::from_monomials({{n, m, c}});
        // dump the monomial view and rebuild
        const double dumped = s.monomial_coeff({n, m});
        const PolySeries back = PolySeries::from_monomials({{n, m, dumped}});
        CHECK(back.taylor_coeff({n, m}) == s.taylor_coeff({n, m}));
        CHECK(dumped == c);
    }
}

TEST_CASE("axis swap is an involution") {
    SplitMix64 rng(3);
    const PolySeries s = random_series(5, rng);
    const PolySeries back = swap_axes(swap_axes(s));
    for (const auto& [k, a] : s.coeffs()) CHECK(back.taylor_coeff(k) == a);
    CHECK(swap_axes(s).taylor_coeff({1, 3}) == s.taylor_coeff({3, 1}));
}

TEST_CASE("canonical iteration order: degree ascending, then n") {
    const PolySeries s = PolySeries::from_taylor({{2, 0, 1.0}, {0, 1, 1.0}, {1, 1, 1.0}, {0, 0, 1.0}, {1, 0, 1.0}, {0, 2, 1.0}});
    std::vector<Index2> order;
    for (const auto& [k, a] : s.coeffs()) order.push_back(k);
    const std::vector<Index2> want = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    REQUIRE(order.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(order[i] == want[i]);
}

TEST_SUITE_END();
