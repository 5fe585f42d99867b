#pragma once

// Exact coefficient families for the polynomial entropy estimators.
//
// Five families are generated as exact rationals:
//   ChebyshevC  c_n^(s): monomial coefficients of the shifted Chebyshev
//               polynomial T_n(2x-1), integers.
//   TaylorLower a_n^(s): f_n(x) = x sum_{r<n} (1-x)^r / r, a lower envelope
//               of -x ln x obtained from the truncated log series.
//   TaylorUpper b_n^(s): h_n(x) = (1-x)(1 - sum_{r<n} (1-x)^r/(r(r+1))),
//               the matching upper envelope; carries a constant term 1/n.
//   ChebLower   wa_n^(s): coefficients of -g_n(x), where g_n is the
//               Chebyshev-derived upper approximation of x ln x.
//   ChebUpper   wb_n^(s): the integrated companion that bounds -x ln x from
//               above; carries a constant term.

#include "entb/dd.hpp"
#include "entb/rational.hpp"

#include <map>
#include <vector>

namespace entb {

enum class Family { ChebyshevC, TaylorLower, TaylorUpper, ChebLower, ChebUpper };

// Chebyshev-linked families are generated up to this degree only.
inline constexpr int kChebDegreeCap = 15;

struct CoefficientTable {
    Family family;
    int degree;
    std::map<int, Rational> entries;       // power s -> exact value
    std::map<int, double> float_entries;   // same, rounded to binary64

    const Rational& at(int s) const;
    Rational sum() const;
};

CoefficientTable cheb_shifted_coeffs(int n);   // 0 <= n <= 15
CoefficientTable taylor_lower_coeffs(int n);   // n >= 2
CoefficientTable taylor_upper_coeffs(int n);   // n >= 2
CoefficientTable cheb_lower_coeffs(int n);     // 2 <= n <= 15
CoefficientTable cheb_upper_coeffs(int n);     // 2 <= n <= 15

// Dense two-term coefficient vectors (index = power, starting at x^0) for
// compensated Horner evaluation. Cached and shared; safe for concurrent use.
const std::vector<dd_real>& family_dd(Family family, int n);

}  // namespace entb
