#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace entb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// Exact binomial coefficient by the Pascal recurrence, cached per row.
inline const std::vector<BigInt>& pascal_row(int n) {
    static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1, BigInt(1));
        for (std::size_t k = 1; k + 1 < row.size(); ++k) row[k] = prev[k - 1] + prev[k];
        rows.push_back(std::move(row));
    }
    return rows[n];
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    return pascal_row(n)[k];
}

// Exact integer power of a rational.
inline Rational rational_pow(Rational base, int e) {
    if (e < 0) return 1 / rational_pow(base, -e);
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

// Small helpers for exact polynomials, stored as ascending coefficient vectors.
using RationalPoly = std::vector<Rational>;

inline RationalPoly poly_derivative(const RationalPoly& p) {
    if (p.size() <= 1) return {Rational(0)};
    RationalPoly out(p.size() - 1);
    for (std::size_t s = 1; s < p.size(); ++s) out[s - 1] = p[s] * static_cast<int>(s);
    return out;
}

inline RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline RationalPoly poly_scale(const RationalPoly& a, const Rational& c) {
    RationalPoly out(a);
    for (auto& v : out) v *= c;
    return out;
}

// Composition p(l0 + l1*x) for a linear inner map, e.g. xi = 2x - 1.
inline RationalPoly poly_compose_linear(const RationalPoly& p, const Rational& l0, const Rational& l1) {
    RationalPoly out = {Rational(0)};
    RationalPoly lin = {l0, l1};
    RationalPoly pw = {Rational(1)};
    for (std::size_t s = 0; s < p.size(); ++s) {
        out = poly_add(out, poly_scale(pw, p[s]));
        if (s + 1 < p.size()) pw = poly_mul(pw, lin);
    }
    return out;
}

inline Rational poly_eval(const RationalPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline bool poly_equal(const RationalPoly& a, const RationalPoly& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational va = i < a.size() ? a[i] : Rational(0);
        Rational vb = i < b.size() ? b[i] : Rational(0);
        if (va != vb) return false;
    }
    return true;
}

}  // namespace entb
