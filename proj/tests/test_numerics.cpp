#include "entb/dd.hpp"
#include "entb/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace entb;

TEST_CASE("binomials match the multiplicative formula") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(30, 15) == BigInt("155117520"));
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("rational two-term split is exact") {
    Rational r(1, 3);
    dd_real v = dd::from_rational(r);
    Rational back = Rational(v.hi) + Rational(v.lo);
    CHECK(abs(to_double(back - r)) < 1e-32);
}

TEST_CASE("compensated Horner agrees with exact rational evaluation") {
    // a cancellation-prone polynomial: large alternating integer coefficients
    RationalPoly p = {Rational(0), Rational(-33600), Rational(990080, 3), Rational(-15275520, 7),
                      Rational(141892608, 11), Rational(-859955200, 13)};
    std::vector<dd_real> coeffs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[i] = dd::from_rational(p[i]);
    for (int k = 0; k <= 64; ++k) {
        double x = k / 64.0;  // exactly representable
        double got = dd::horner(coeffs, x);
        double expect = to_double(poly_eval(p, Rational(x)));
        CHECK(std::fabs(got - expect) <= 4e-16 * std::max(1.0, std::fabs(expect)));
    }
}

TEST_CASE("dd power sums match exact rational sums") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> p(8);
    for (auto& v : p) v = uni(rng);
    auto sums = dd::power_sums(p, 9);
    for (int s : {2, 5, 9}) {
        Rational expect(0);
        for (double v : p) expect += rational_pow(Rational(v), s);
        CHECK(std::fabs(sums[s].value() - to_double(expect)) < 1e-15 * to_double(expect) + 1e-300);
    }
}

TEST_CASE("polynomial helpers compose and differentiate exactly") {
    // p(x) = (2x-1)^2 = 4x^2 - 4x + 1
    RationalPoly sq = {Rational(0), Rational(0), Rational(1)};
    RationalPoly composed = poly_compose_linear(sq, Rational(-1), Rational(2));
    CHECK(poly_equal(composed, {Rational(1), Rational(-4), Rational(4)}));
    CHECK(poly_equal(poly_derivative(composed), {Rational(-4), Rational(8)}));
    CHECK(poly_eval(composed, Rational(1, 2)) == 0);
}
