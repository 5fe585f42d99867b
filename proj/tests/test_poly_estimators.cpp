#include "entb/poly_estimators.hpp"

#include "entb/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace entb;

TEST_CASE("f, h, g at hand-computed points") {
    CHECK(eval_f(2, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(eval_f(4, 1.0) == 0.0);
    CHECK(eval_f(7, 0.0) == 0.0);
    CHECK(eval_h(5, 0.0) == doctest::Approx(1.0 / 5).epsilon(1e-14));
    CHECK(eval_h(3, 1.0) == 0.0);
    CHECK(eval_h(2, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    for (double x : {0.0, 0.125, 0.5, 0.75, 1.0})
        CHECK(eval_g(2, x) == doctest::Approx(x * x - x).epsilon(1e-13));
    CHECK(eval_g(3, 1.0) == doctest::Approx(0.0).epsilon(1e-13));
    // exact n=3 polynomial (8/3)x^2 - (16/9)x - (8/9)x^3 at 1/2
    CHECK(eval_g(3, 0.5) == doctest::Approx(-1.0 / 3).epsilon(1e-14));
    CHECK_THROWS_AS(eval_f(3, -0.1), DomainError);
    CHECK_THROWS_AS(eval_h(3, 1.5), DomainError);
    CHECK_THROWS_AS(eval_g(1, 0.5), DegreeOutOfRange);
}

TEST_CASE("series form matches the coefficient form") {
    for (int n : {2, 3, 8, 15})
        for (int i = 0; i <= 500; ++i) {
            double x = i / 500.0;
            const auto& a = family_dd(Family::TaylorLower, n);
            const auto& b = family_dd(Family::TaylorUpper, n);
            CHECK(std::fabs(eval_f(n, x) - dd::horner(a, x)) < 1e-12);
            CHECK(std::fabs(eval_h(n, x) - dd::horner(b, x)) < 1e-12);
        }
}

TEST_CASE("endpoint derivatives") {
    auto [g0_3, g1_3] = g_endpoint_derivatives(3);
    CHECK(g0_3 == Rational(-16, 9));
    CHECK(g1_3 == Rational(8, 9));
    CHECK(g_endpoint_derivatives(2).second == 1);
    CHECK(g_endpoint_derivatives(4).first == Rational(-7, 3));
    for (int n = 2; n <= 15; ++n) {
        RationalPoly gp = poly_derivative(g_poly(n));
        auto [at0, at1] = g_endpoint_derivatives(n);
        CHECK(poly_eval(gp, Rational(0)) == at0);
        CHECK(poly_eval(gp, Rational(1)) == at1);
        CHECK(at0 < 0);
    }
}

TEST_CASE("second derivative closed values at the ends") {
    for (int n = 2; n <= 15; ++n) {
        RationalPoly g2 = g_second_derivative_coeffs(n);
        Rational at1 = poly_eval(g2, Rational(1));
        if (n % 2 == 0) CHECK(at1 == 2);
        else CHECK(at1 == 0);
    }
    CHECK(poly_equal(g_second_derivative_coeffs(2), {Rational(2)}));
    CHECK(poly_equal(g_second_derivative_coeffs(3), {Rational(16, 3), Rational(-16, 3)}));
}

TEST_CASE("Gegenbauer recurrence special values") {
    CHECK(gegenbauer_c2(0, 0.37) == 1.0);
    for (int r = 0; r <= 6; ++r)
        CHECK(gegenbauer_c2(2 * r, 0.0) ==
              doctest::Approx(((r % 2 == 0) ? 1.0 : -1.0) * (r + 1)).epsilon(1e-13));
    for (int n = 0; n <= 12; ++n)
        CHECK(gegenbauer_c2(n, 1.0) ==
              doctest::Approx((n + 1.0) * (n + 2.0) * (n + 3.0) / 6.0).epsilon(1e-12));
}

TEST_CASE("Gegenbauer form reproduces the second derivative") {
    for (int n = 2; n <= 15; ++n) {
        std::vector<dd_real> g2(g_second_derivative_coeffs(n).size());
        RationalPoly poly = g_second_derivative_coeffs(n);
        for (std::size_t i = 0; i < poly.size(); ++i) g2[i] = dd::from_rational(poly[i]);
        for (int k = 0; k < 200; ++k) {
            double x = (k + 1.0) / 201.0;
            CHECK(std::fabs(dd::horner(g2, x) - g_second_derivative_gegenbauer(n, x)) < 1e-9);
        }
    }
}

TEST_CASE("envelopes hold on a coarse grid") {
    GridSpec grid{20'000, 1'000, 1e-2};
    for (int n = 2; n <= 15; ++n)
        for (EnvelopeTag tag : {EnvelopeTag::TaylorLower, EnvelopeTag::TaylorUpper,
                                EnvelopeTag::ChebLower, EnvelopeTag::ChebUpper}) {
            EnvelopeReport r = verify_envelope(n, tag, grid);
            CHECK(r.min_slack >= -1e-13);
            CHECK(r.grid_size > grid.uniform);
        }
}

TEST_CASE("degree-2 lower slack vanishes only at the ends") {
    EnvelopeReport r = verify_envelope(2, EnvelopeTag::TaylorLower, {5'000, 100, 1e-2});
    CHECK(r.min_slack >= 0.0);
    double interior = -xlnx(0.5) - eval_f(2, 0.5);
    CHECK(interior > 0.04);  // strictly positive away from the ends
}

TEST_CASE("monotone improvement in the degree") {
    for (int n : {2, 6, 10})
        for (int i = 0; i <= 300; ++i) {
            double x = i / 300.0;
            CHECK(eval_f(n + 1, x) >= eval_f(n, x) - 1e-13);
            CHECK(eval_h(n + 1, x) <= eval_h(n, x) + 1e-13);
        }
}

TEST_CASE("envelope tag parsing") {
    CHECK(envelope_tag_from_string("cheb-lower") == EnvelopeTag::ChebLower);
    CHECK(to_string(EnvelopeTag::TaylorUpper) == "taylor-upper");
    CHECK_THROWS_AS(envelope_tag_from_string("nope"), InvalidTag);
}
