#include "entb/poly_estimators.hpp"

#include "entb/errors.hpp"
#include "entb/parallel.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace entb {

std::string to_string(EnvelopeTag tag) {
    switch (tag) {
        case EnvelopeTag::TaylorLower: return "taylor-lower";
        case EnvelopeTag::TaylorUpper: return "taylor-upper";
        case EnvelopeTag::ChebLower: return "cheb-lower";
        case EnvelopeTag::ChebUpper: return "cheb-upper";
    }
    return "?";
}

EnvelopeTag envelope_tag_from_string(const std::string& s) {
    if (s == "taylor-lower") return EnvelopeTag::TaylorLower;
    if (s == "taylor-upper") return EnvelopeTag::TaylorUpper;
    if (s == "cheb-lower") return EnvelopeTag::ChebLower;
    if (s == "cheb-upper") return EnvelopeTag::ChebUpper;
    throw InvalidTag("unknown envelope tag '" + s + "'");
}

double xlnx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

namespace {

void require_unit_interval(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("abscissa must lie in [0,1], got " + std::to_string(x));
}

void require_cheb_degree(int n) {
    if (n < 2 || n > kChebDegreeCap)
        throw DegreeOutOfRange("degree must be in 2..15, got " + std::to_string(n));
}

}  // namespace

double eval_f(int n, double x) {
    if (n < 2) throw DegreeOutOfRange("degree must be >= 2, got " + std::to_string(n));
    require_unit_interval(x);
    const double z = 1.0 - x;
    double zpow = 1.0, acc = 0.0;
    for (int r = 1; r <= n - 1; ++r) {
        zpow *= z;
        acc += zpow / r;
    }
    return x * acc;
}

double eval_h(int n, double x) {
    if (n < 2) throw DegreeOutOfRange("degree must be >= 2, got " + std::to_string(n));
    require_unit_interval(x);
    const double z = 1.0 - x;
    double zpow = 1.0, acc = 0.0;
    for (int r = 1; r <= n - 1; ++r) {
        zpow *= z;
        acc += zpow / (static_cast<double>(r) * (r + 1));
    }
    return z * (1.0 - acc);
}

double eval_g(int n, double x) {
    require_cheb_degree(n);
    require_unit_interval(x);
    // The ChebLower table holds the coefficients of -g_n.
    return -dd::horner(family_dd(Family::ChebLower, n), x);
}

RationalPoly g_poly(int n) {
    require_cheb_degree(n);
    CoefficientTable wa = cheb_lower_coeffs(n);
    RationalPoly p(n + 1, Rational(0));
    for (const auto& [s, v] : wa.entries) p[s] = -v;
    return p;
}

std::pair<Rational, Rational> g_endpoint_derivatives(int n) {
    require_cheb_degree(n);
    Rational at1 = (n % 2 == 0) ? Rational(1) : Rational(n * n - 1, n * n);
    Rational at0(0);
    if (n % 2 == 1) {
        for (int r = 1; r <= n / 2; ++r) at0 += Rational(4 * r * r, n - 2 * r);
    } else {
        for (int r = 1; r <= n / 2; ++r) at0 += Rational((2 * r - 1) * (2 * r - 1), n - 2 * r + 1);
    }
    at0 *= Rational(-4, n * n);
    return {at0, at1};
}

RationalPoly g_second_derivative_coeffs(int n) {
    return poly_derivative(poly_derivative(g_poly(n)));
}

double gegenbauer_c2(int n, double xi) {
    if (n < 0) return 0.0;
    double prev = 1.0;  // C_0
    if (n == 0) return prev;
    double cur = 4.0 * xi;  // C_1
    for (int k = 2; k <= n; ++k) {
        double next = (2.0 * (k + 1) * xi * cur - (k + 2) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

double g_second_derivative_gegenbauer(int n, double x) {
    require_cheb_degree(n);
    if (x <= 0.0) throw DomainError("Gegenbauer form of g'' needs x > 0");
    const double xi = 2.0 * x - 1.0;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double c1 = gegenbauer_c2(n - 1, xi);
    const double c3 = (n >= 3) ? gegenbauer_c2(n - 3, xi) : 0.0;
    return 2.0 * sign / (n * n) * (c1 - c3 + sign * n * n) / (xi + 1.0);
}

namespace {

struct SlackFn {
    const std::vector<dd_real>* coeffs;
    double orient;  // +1: slack = P(x) + x ln x;  -1: slack = -P(x) - x ln x

    double operator()(double x) const {
        double p = dd::horner(*coeffs, x);
        return orient > 0 ? p + xlnx(x) : -p - xlnx(x);
    }
};

SlackFn slack_function(int n, EnvelopeTag tag) {
    switch (tag) {
        case EnvelopeTag::TaylorLower:
            // f_n(x) <= -x ln x  <=>  -f_n(x) - x ln x >= 0
            return {&family_dd(Family::TaylorLower, n), -1.0};
        case EnvelopeTag::TaylorUpper:
            // -x ln x <= h_n(x)  <=>  h_n(x) + x ln x >= 0
            return {&family_dd(Family::TaylorUpper, n), +1.0};
        case EnvelopeTag::ChebLower:
            // x ln x <= g_n(x); the stored table is -g_n
            return {&family_dd(Family::ChebLower, n), -1.0};
        case EnvelopeTag::ChebUpper:
            return {&family_dd(Family::ChebUpper, n), +1.0};
    }
    throw InvalidTag("unknown envelope tag");
}

// Endpoint-clustered abscissas: Chebyshev-type density inside [0, window]
// and its mirror at 1.
void append_clusters(std::vector<double>& pts, std::size_t count, double window) {
    for (std::size_t k = 1; k <= count; ++k) {
        double u = std::sin(M_PI * k / (2.0 * count));
        double v = window * u * u;
        pts.push_back(v);
        pts.push_back(1.0 - v);
    }
}

// Ranges near the endpoints where the ChebLower inequality has an analytic
// proof; they get an extra dense sweep.
std::pair<double, double> analytic_ranges(int n) {
    double right_lo;
    if (n == 2) right_lo = 0.0;
    else if (n % 2 == 1) right_lo = 1.0 - 2.0 / (n * n + 2.0);
    else right_lo = std::max(0.0, 1.0 - 9.0 / (2.0 * n * n));
    auto [gp0, gp1] = g_endpoint_derivatives(n);
    (void)gp1;
    double left_hi = std::exp(to_double(gp0));
    return {left_hi, right_lo};
}

}  // namespace

EnvelopeReport verify_envelope(int n, EnvelopeTag tag, const GridSpec& grid) {
    if (tag == EnvelopeTag::ChebLower || tag == EnvelopeTag::ChebUpper) require_cheb_degree(n);
    else if (n < 2) throw DegreeOutOfRange("degree must be >= 2");

    const SlackFn slack = slack_function(n, tag);
    const std::size_t uniform = std::max<std::size_t>(grid.uniform, 2);

    struct Best {
        double slack = std::numeric_limits<double>::infinity();
        double x = 0.0;
    };
    const std::size_t chunk = 65536;
    const std::size_t n_chunks = (uniform + chunk - 1) / chunk;
    std::vector<Best> partial(n_chunks);
    parallel_chunks(uniform, chunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        Best b;
        const double step = 1.0 / static_cast<double>(uniform - 1);
        for (std::size_t i = begin; i < end; ++i) {
            double x = (i + 1 == uniform) ? 1.0 : static_cast<double>(i) * step;
            double s = slack(x);
            if (s < b.slack) { b.slack = s; b.x = x; }
        }
        partial[c] = b;
    });
    Best best;
    for (const auto& b : partial)
        if (b.slack < best.slack) best = b;

    std::vector<double> extra;
    extra.reserve(2 * grid.cluster + 2 * grid.cluster + 2);
    append_clusters(extra, grid.cluster, grid.window);
    if (tag == EnvelopeTag::ChebLower && grid.cluster > 0) {
        auto [left_hi, right_lo] = analytic_ranges(n);
        for (std::size_t k = 0; k <= grid.cluster; ++k) {
            double u = static_cast<double>(k) / grid.cluster;
            extra.push_back(left_hi * u);
            extra.push_back(right_lo + (1.0 - right_lo) * u);
        }
    }
    for (double x : extra) {
        double s = slack(x);
        if (s < best.slack) { best.slack = s; best.x = x; }
    }

    return {n, tag, uniform + extra.size(), best.slack, best.x};
}

double max_envelope_deviation(int n, std::size_t points) {
    require_cheb_degree(n);
    const auto& coeffs = family_dd(Family::ChebLower, n);
    points = std::max<std::size_t>(points, 2);
    const std::size_t chunk = 65536;
    const std::size_t n_chunks = (points + chunk - 1) / chunk;
    std::vector<double> partial(n_chunks, 0.0);
    parallel_chunks(points, chunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        double worst = 0.0;
        const double step = 1.0 / static_cast<double>(points - 1);
        for (std::size_t i = begin; i < end; ++i) {
            double x = (i + 1 == points) ? 1.0 : static_cast<double>(i) * step;
            double d = std::fabs(-dd::horner(coeffs, x) - xlnx(x));
            worst = std::max(worst, d);
        }
        partial[c] = worst;
    });
    double worst = 0.0;
    for (double w : partial) worst = std::max(worst, w);
    std::vector<double> extra;
    append_clusters(extra, 10'000, 1e-2);
    for (double x : extra) worst = std::max(worst, std::fabs(-dd::horner(coeffs, x) - xlnx(x)));
    return worst;
}

}  // namespace entb
