#pragma once

// Evaluation and verification of the estimator polynomials f_n, h_n, g_n.
// f_n and h_n sandwich -x ln x from the truncated log series; g_n is the
// Chebyshev-derived upper approximation of x ln x whose pointwise validity
// is certified here on dense grids.

#include "entb/coefficients.hpp"
#include "entb/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace entb {

enum class EnvelopeTag { TaylorLower, TaylorUpper, ChebLower, ChebUpper };

std::string to_string(EnvelopeTag tag);
EnvelopeTag envelope_tag_from_string(const std::string& s);

struct GridSpec {
    std::size_t uniform = 1'000'000;  // uniform points on [0,1], endpoints included
    std::size_t cluster = 10'000;     // extra points clustered near each endpoint
    double window = 1e-2;             // width of each endpoint cluster
};

struct EnvelopeReport {
    int degree;
    EnvelopeTag tag;
    std::size_t grid_size;
    double min_slack;   // most negative margin of the inequality over the grid
    double argmin_x;
};

// x ln x with the removable singularity closed: returns 0 at x = 0.
double xlnx(double x);

double eval_f(int n, double x);  // f_n(x) = x sum_{r=1..n-1} (1-x)^r / r
double eval_h(int n, double x);  // h_n(x) = (1-x)(1 - sum_{r=1..n-1} (1-x)^r/(r(r+1)))
double eval_g(int n, double x);  // compensated Horner from the exact coefficients

// Exact ascending monomial coefficients of g_n (constant term 0).
RationalPoly g_poly(int n);

// (g'(0), g'(1)) as exact rationals, from the closed endpoint sums.
std::pair<Rational, Rational> g_endpoint_derivatives(int n);

// Exact coefficient vector of g_n''(x), by termwise differentiation.
RationalPoly g_second_derivative_coeffs(int n);

// Gegenbauer polynomial C_n^(2)(xi) by the three-term recurrence.
double gegenbauer_c2(int n, double xi);

// g_n''(x) through the Gegenbauer representation (xi = 2x - 1, x > 0).
double g_second_derivative_gegenbauer(int n, double x);

// Certifies the chosen inequality over the grid and reports the minimum
// slack. For ChebLower the endpoint ranges with analytic validity are
// additionally sampled densely.
EnvelopeReport verify_envelope(int n, EnvelopeTag tag, const GridSpec& grid = {});

// max_x |g_n(x) - x ln x| over a dense grid (uniform + endpoint clusters).
double max_envelope_deviation(int n, std::size_t points);

}  // namespace entb
