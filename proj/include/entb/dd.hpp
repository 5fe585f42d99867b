#pragma once

// Compensated (double-double) arithmetic. The estimator polynomials carry
// integer coefficients up to ~3.6e10 that cancel almost completely near the
// interval ends, so plain binary64 Horner loses ~8 digits there. Carrying an
// unevaluated (hi, lo) pair keeps the evaluation error near eps^2 * |coeffs|,
// far below the 1e-13 slack allowance used by the envelope checks.

#include "entb/rational.hpp"

#include <cmath>
#include <vector>

namespace entb {

struct dd_real {
    double hi = 0.0;
    double lo = 0.0;

    dd_real() = default;
    dd_real(double h) : hi(h), lo(0.0) {}
    dd_real(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace dd {

inline dd_real quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd_real two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    return {s, (a - (s - v)) + (b - v)};
}

inline dd_real two_prod(double a, double b) {
    double p = a * b;
#if defined(__FMA__) || defined(__AVX2__)
    return {p, std::fma(a, b, -p)};
#else
    // Dekker split
    constexpr double split = 134217729.0;  // 2^27 + 1
    double ca = split * a;
    double ahi = ca - (ca - a);
    double alo = a - ahi;
    double cb = split * b;
    double bhi = cb - (cb - b);
    double blo = b - bhi;
    double err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    return {p, err};
#endif
}

inline dd_real add(const dd_real& a, const dd_real& b) {
    dd_real s = two_sum(a.hi, b.hi);
    dd_real t = two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    dd_real r = quick_two_sum(s.hi, lo);
    lo = r.lo + t.lo;
    return quick_two_sum(r.hi, lo);
}

inline dd_real add(const dd_real& a, double b) {
    dd_real s = two_sum(a.hi, b);
    double lo = s.lo + a.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd_real sub(const dd_real& a, const dd_real& b) { return add(a, dd_real{-b.hi, -b.lo}); }

inline dd_real mul(const dd_real& a, double b) {
    dd_real p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline dd_real mul(const dd_real& a, const dd_real& b) {
    dd_real p = two_prod(a.hi, b.hi);
    double lo = p.lo + (a.hi * b.lo + a.lo * b.hi);
    return quick_two_sum(p.hi, lo);
}

inline dd_real div(const dd_real& a, const dd_real& b) {
    double q1 = a.hi / b.hi;
    dd_real r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    return add(add(dd_real{q1}, q2), q3);
}

// Exact two-term representation of a rational.
inline dd_real from_rational(const Rational& r) {
    double hi = to_double(r);
    double lo = to_double(r - Rational(hi));
    return {hi, lo};
}

// Horner evaluation of a dense polynomial (ascending coefficients) at a
// double abscissa; the coefficients are exact two-term values.
inline double horner(const std::vector<dd_real>& coeffs, double x) {
    if (coeffs.empty()) return 0.0;
    dd_real acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
    return acc.value();
}

// Power sums sum_j p_j^s for s = 1..smax; out[s] is the s-th sum (out[0] unused).
inline std::vector<dd_real> power_sums(const std::vector<double>& p, int smax) {
    std::vector<dd_real> out(smax + 1);
    for (double v : p) {
        dd_real pw{v};
        out[1] = add(out[1], pw);
        for (int s = 2; s <= smax; ++s) {
            pw = mul(pw, v);
            out[s] = add(out[s], pw);
        }
    }
    return out;
}

}  // namespace dd
}  // namespace entb
