#include "entb/coefficients.hpp"

#include "entb/errors.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace entb {

const Rational& CoefficientTable::at(int s) const {
    auto it = entries.find(s);
    if (it == entries.end())
        throw DegreeOutOfRange("coefficient power " + std::to_string(s) + " not present");
    return it->second;
}

Rational CoefficientTable::sum() const {
    Rational total(0);
    for (const auto& [s, v] : entries) total += v;
    return total;
}

namespace {

void fill_floats(CoefficientTable& t) {
    for (const auto& [s, v] : t.entries) t.float_entries[s] = to_double(v);
}

Rational harmonic(int from, int to) {  // sum_{r=from..to} 1/r
    Rational h(0);
    for (int r = from; r <= to; ++r) h += Rational(1, r);
    return h;
}

}  // namespace

CoefficientTable cheb_shifted_coeffs(int n) {
    if (n < 0 || n > kChebDegreeCap)
        throw DegreeOutOfRange("shifted Chebyshev degree must be in 0..15, got " + std::to_string(n));
    CoefficientTable t{Family::ChebyshevC, n, {}, {}};
    if (n == 0) {
        t.entries[0] = 1;
    } else {
        t.entries[0] = (n % 2 == 0) ? 1 : -1;
        for (int s = 1; s <= n; ++s) {
            // c_n^(s) = (-1)^(n+s) 2^(2s-1) [2 C(n+s, n-s) - C(n+s-1, n-s)]
            BigInt v = (BigInt(2) * binomial(n + s, n - s) - binomial(n + s - 1, n - s)) << (2 * s - 1);
            if ((n + s) % 2 != 0) v = -v;
            t.entries[s] = Rational(v);
        }
    }
    fill_floats(t);
    return t;
}

CoefficientTable taylor_lower_coeffs(int n) {
    if (n < 2) throw DegreeOutOfRange("Taylor family needs degree >= 2, got " + std::to_string(n));
    CoefficientTable t{Family::TaylorLower, n, {}, {}};
    t.entries[1] = harmonic(1, n - 1);
    for (int s = 2; s <= n; ++s) {
        Rational acc(0);
        for (int r = s - 1; r <= n - 1; ++r) acc += Rational(binomial(r, s - 1), r);
        t.entries[s] = (s % 2 == 0) ? -acc : acc;
    }
    fill_floats(t);
    return t;
}

CoefficientTable taylor_upper_coeffs(int n) {
    if (n < 2) throw DegreeOutOfRange("Taylor family needs degree >= 2, got " + std::to_string(n));
    CoefficientTable t{Family::TaylorUpper, n, {}, {}};
    t.entries[0] = Rational(1, n);
    t.entries[1] = harmonic(2, n - 1);
    for (int s = 2; s <= n; ++s) {
        Rational acc(0);
        for (int r = s - 1; r <= n - 1; ++r) acc += Rational(binomial(r, s - 1), r);
        acc /= s;
        t.entries[s] = (s % 2 == 0) ? -acc : acc;
    }
    fill_floats(t);
    return t;
}

CoefficientTable cheb_lower_coeffs(int n) {
    if (n < 2 || n > kChebDegreeCap)
        throw DegreeOutOfRange("Chebyshev family needs degree in 2..15, got " + std::to_string(n));
    CoefficientTable c = cheb_shifted_coeffs(n);
    CoefficientTable t{Family::ChebLower, n, {}, {}};
    const Rational pref = Rational((n % 2 == 0) ? 1 : -1, 2 * n * n);
    Rational first(0);
    for (int s = 2; s <= n; ++s) {
        Rational v = pref * c.at(s) / (s - 1);
        first += v;
        t.entries[s] = -v;
    }
    t.entries[1] = first;  // wa_n^(1) = -sum_{s>=2} wa_n^(s)
    fill_floats(t);
    return t;
}

CoefficientTable cheb_upper_coeffs(int n) {
    CoefficientTable wa = cheb_lower_coeffs(n);
    CoefficientTable t{Family::ChebUpper, n, {}, {}};
    Rational integral(0);
    for (int s = 1; s <= n; ++s) integral += wa.at(s) / s;
    t.entries[0] = Rational(1) - integral;
    t.entries[1] = wa.at(1) - 1;
    for (int s = 2; s <= n; ++s) t.entries[s] = wa.at(s) / s;
    fill_floats(t);
    return t;
}

const std::vector<dd_real>& family_dd(Family family, int n) {
    static std::map<std::pair<Family, int>, std::vector<dd_real>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(family, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    CoefficientTable t = [&] {
        switch (family) {
            case Family::ChebyshevC: return cheb_shifted_coeffs(n);
            case Family::TaylorLower: return taylor_lower_coeffs(n);
            case Family::TaylorUpper: return taylor_upper_coeffs(n);
            case Family::ChebLower: return cheb_lower_coeffs(n);
            case Family::ChebUpper: return cheb_upper_coeffs(n);
        }
        throw InvalidTag("unknown coefficient family");
    }();
    std::vector<dd_real> dense(n + 1);
    for (const auto& [s, v] : t.entries) dense[s] = dd::from_rational(v);
    return cache.emplace(key, std::move(dense)).first->second;
}

}  // namespace entb
