#include "entb/coefficients.hpp"
#include "entb/errors.hpp"
#include "entb/table1.hpp"

#include <doctest.h>

#include <cmath>

using namespace entb;

TEST_CASE("shifted Chebyshev coefficients hit the reference integers") {
    CHECK(cheb_shifted_coeffs(0).at(0) == 1);
    CoefficientTable t3 = cheb_shifted_coeffs(3);
    CHECK(t3.at(1) == 18);
    CHECK(t3.at(2) == -48);
    CHECK(t3.at(3) == 32);
    CHECK(cheb_shifted_coeffs(15).at(15) == 536870912);
    const auto& ref = shifted_chebyshev_reference();
    for (int n = 2; n <= 15; ++n)
        for (int s = 2; s <= n; ++s)
            CHECK(cheb_shifted_coeffs(n).at(s) == Rational(ref[n - 2][s - 2]));
    CHECK_THROWS_AS(cheb_shifted_coeffs(16), DegreeOutOfRange);
    CHECK_THROWS_AS(cheb_shifted_coeffs(-1), DegreeOutOfRange);
}

TEST_CASE("Taylor lower family") {
    CoefficientTable t2 = taylor_lower_coeffs(2);
    CHECK(t2.at(1) == 1);
    CHECK(t2.at(2) == -1);
    CoefficientTable t3 = taylor_lower_coeffs(3);
    CHECK(t3.at(1) == Rational(3, 2));
    CHECK(t3.at(2) == -2);
    CHECK(t3.at(3) == Rational(1, 2));
    for (int n : {2, 5, 11, 30}) CHECK(taylor_lower_coeffs(n).sum() == 0);
    CHECK_THROWS_AS(taylor_lower_coeffs(1), DegreeOutOfRange);
}

TEST_CASE("Taylor upper family") {
    CoefficientTable t2 = taylor_upper_coeffs(2);
    CHECK(t2.at(0) == Rational(1, 2));
    CHECK(t2.at(1) == 0);
    CHECK(t2.at(2) == Rational(-1, 2));
    CHECK(taylor_upper_coeffs(3).at(2) == -1);
    for (int n : {2, 7, 23}) {
        CoefficientTable t = taylor_upper_coeffs(n);
        CHECK(t.at(0) == Rational(1, n));
        CHECK(t.sum() == 0);  // value at x = 1 vanishes
    }
    CHECK_THROWS_AS(taylor_upper_coeffs(0), DegreeOutOfRange);
}

TEST_CASE("Chebyshev-linked lower family") {
    CoefficientTable t2 = cheb_lower_coeffs(2);
    CHECK(t2.at(1) == 1);
    CHECK(t2.at(2) == -1);
    CoefficientTable t3 = cheb_lower_coeffs(3);
    CHECK(t3.at(1) == Rational(16, 9));
    CHECK(t3.at(2) == Rational(-8, 3));
    CHECK(t3.at(3) == Rational(8, 9));
    for (int n = 2; n <= 15; ++n) CHECK(cheb_lower_coeffs(n).sum() == 0);
    CHECK_THROWS_AS(cheb_lower_coeffs(16), DegreeOutOfRange);
}

TEST_CASE("Chebyshev-linked upper family") {
    CoefficientTable t2 = cheb_upper_coeffs(2);
    CHECK(t2.at(0) == Rational(1, 2));
    CHECK(t2.at(1) == 0);
    CHECK(t2.at(2) == Rational(-1, 2));
    CHECK(cheb_upper_coeffs(3).at(2) == Rational(-4, 3));
    for (int n = 2; n <= 15; ++n) CHECK(cheb_upper_coeffs(n).sum() == 0);
}

TEST_CASE("integer coefficients stay inside signed 64-bit range") {
    const BigInt cap = BigInt(1) << 63;
    for (int n = 2; n <= 15; ++n)
        for (const auto& [s, v] : cheb_shifted_coeffs(n).entries) CHECK(abs(numerator(v)) < cap);
}

TEST_CASE("polynomial identity against the cosine form") {
    for (int n : {1, 4, 9, 15}) {
        const auto& c = family_dd(Family::ChebyshevC, n);
        for (int i = 0; i <= 100; ++i) {
            double x = i / 100.0;
            CHECK(dd::horner(c, x) ==
                  doctest::Approx(std::cos(n * std::acos(2 * x - 1))).epsilon(1e-9));
        }
    }
}

TEST_CASE("float entries mirror the exact entries") {
    CoefficientTable t = cheb_lower_coeffs(9);
    for (const auto& [s, v] : t.entries) CHECK(t.float_entries.at(s) == to_double(v));
}
