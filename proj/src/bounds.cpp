#include "entb/bounds.hpp"

#include "entb/coefficients.hpp"
#include "entb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entb {

namespace {

double pow_int(double base, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidDistribution("distribution needs at least one outcome");
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw InvalidDistribution("probabilities must be nonnegative");
        total += p;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw InvalidDistribution("probabilities sum to " + std::to_string(total));
}

IndexVector::IndexVector(int degree, std::vector<double> values) : degree_(degree) {
    values_.reserve(values.size());
    for (double v : values) values_.emplace_back(v);
    validate();
}

IndexVector::IndexVector(int degree, std::vector<dd_real> values)
    : degree_(degree), values_(std::move(values)) {
    validate();
}

void IndexVector::validate() const {
    if (degree_ < 2) throw DegreeOutOfRange("index vector needs degree >= 2");
    if (static_cast<int>(values_.size()) != degree_ - 1)
        throw InfeasibleIndex("index vector must carry I^(2)..I^(n)");
    double prev = 1.0 + 1e-9;
    for (const dd_real& dv : values_) {
        double v = dv.value();
        if (v > 1.0 + 1e-9) throw InfeasibleIndex("power sum exceeds 1");
        if (v > prev + 1e-9) throw InfeasibleIndex("power sums must be nonincreasing in s");
        if (!(v >= 0.0)) throw InfeasibleIndex("power sum must be nonnegative");
        prev = v;
    }
}

double IndexVector::at(int s) const { return at_dd(s).value(); }

const dd_real& IndexVector::at_dd(int s) const {
    if (s < 2 || s > degree_) throw DegreeOutOfRange("index order out of range");
    return values_[s - 2];
}

std::string to_string(Method m) { return m == Method::Taylor ? "taylor" : "cheb"; }

Method method_from_string(const std::string& s) {
    if (s == "taylor") return Method::Taylor;
    if (s == "cheb" || s == "chebyshev") return Method::Chebyshev;
    throw InvalidTag("unknown method '" + s + "'");
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double v : p.probs())
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

double index_coincidence(const ProbabilityVector& p, int s) {
    if (s < 2) throw DegreeOutOfRange("index order must be >= 2");
    return dd::power_sums(p.probs(), s)[s].value();
}

double tsallis_entropy(const ProbabilityVector& p, int s) {
    if (s < 2) throw DegreeOutOfRange("Tsallis order must be >= 2");
    dd_real num = dd::add(dd::power_sums(p.probs(), s)[s], -1.0);
    return num.value() / (1.0 - s);
}

IndexVector indices_of(const ProbabilityVector& p, int n) {
    if (n < 2) throw DegreeOutOfRange("index degree must be >= 2");
    auto sums = dd::power_sums(p.probs(), n);
    std::vector<dd_real> vals(sums.begin() + 2, sums.end());
    return IndexVector(n, std::move(vals));
}

double upsilon_root(int L, int n, double I) {
    if (L < 2) throw DomainError("outcome count must be >= 2");
    if (n < 2) throw DegreeOutOfRange("power must be >= 2");
    const double i_min = pow_int(1.0 / L, n - 1);  // L^(1-n)
    if (I > 1.0 + 1e-12) throw InfeasibleIndex("power sum exceeds 1");
    if (I < i_min * (1.0 - 1e-9)) throw InfeasibleIndex("power sum below the uniform floor");
    if (I >= 1.0) return 1.0;
    // Within float resolution of the uniform floor the only consistent root
    // is the uniform one; solving would square-root-amplify representation
    // noise of I.
    if (I <= i_min * (1.0 + 1e-13)) return 1.0 / L;

    const double scale = pow_int(static_cast<double>(L - 1), n - 1);
    auto g = [&](double y) { return pow_int(1.0 - y, n) / scale + pow_int(y, n) - I; };
    double lo = 1.0 / L, hi = 1.0;
    if (g(lo) >= 0.0) return lo;
    if (g(hi) <= 0.0) return hi;
    const double tol = 1e-13;
    int iter = 0;
    while (hi - lo > tol) {
        if (++iter > 200) throw ConvergenceFailure("bisection did not reach tolerance");
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

double upsilon_root2_closed(int L, double I2) {
    return (1.0 + std::sqrt(static_cast<double>(L - 1)) * std::sqrt(L * I2 - 1.0)) / L;
}

TwoSidedBound two_sided_from_indices(Method method, int degree, double upsilon, int outcomes,
                                     const std::vector<dd_real>& indices) {
    if (static_cast<int>(indices.size()) < degree)
        throw InfeasibleIndex("need I^(1)..I^(degree)");
    if (!(upsilon > 0.0 && upsilon <= 1.0)) throw DomainError("Upsilon must lie in (0,1]");
    const Family lower_family = method == Method::Taylor ? Family::TaylorLower : Family::ChebLower;
    const Family upper_family = method == Method::Taylor ? Family::TaylorUpper : Family::ChebUpper;
    const auto& lower_c = family_dd(lower_family, degree);
    const auto& upper_c = family_dd(upper_family, degree);

    const dd_real inv_u = dd::div(dd_real{1.0}, dd_real{upsilon});
    dd_real upow{1.0};  // Upsilon^(1-s)
    dd_real lo_acc{0.0};
    dd_real up_acc = dd::mul(upper_c[0], upsilon * outcomes);
    for (int s = 1; s <= degree; ++s) {
        if (s > 1) upow = dd::mul(upow, inv_u);
        dd_real common = dd::mul(upow, indices[s - 1]);
        lo_acc = dd::add(lo_acc, dd::mul(lower_c[s], common));
        up_acc = dd::add(up_acc, dd::mul(upper_c[s], common));
    }
    const double log_u = std::log(upsilon);
    return {lo_acc.value() - log_u, up_acc.value() - log_u, upsilon, method, degree};
}

namespace {

std::vector<dd_real> dense_indices(const IndexVector& idx, int upto) {
    std::vector<dd_real> dense(upto);
    dense[0] = dd_real{1.0};
    for (int s = 2; s <= upto; ++s) dense[s - 1] = idx.at_dd(s);
    return dense;
}

void require_feasible(const IndexVector& idx, int L) {
    for (int s = 2; s <= idx.degree(); ++s) {
        double floor = pow_int(1.0 / L, s - 1);
        if (idx.at(s) < floor * (1.0 - 1e-9))
            throw InfeasibleIndex("I^(" + std::to_string(s) + ") below the uniform floor");
    }
}

}  // namespace

TwoSidedBound prop1_taylor(const IndexVector& idx, int L) {
    require_feasible(idx, L);
    const int n = idx.degree();
    double u = upsilon_root(L, n, idx.at(n));
    return two_sided_from_indices(Method::Taylor, n, u, L, dense_indices(idx, n));
}

TwoSidedBound prop1_chebyshev(const IndexVector& idx, int L) {
    require_feasible(idx, L);
    const int n = idx.degree();
    const int eff = std::min(n, kChebDegreeCap);
    double u = upsilon_root(L, n, idx.at(n));  // full-degree index drives Upsilon
    return two_sided_from_indices(Method::Chebyshev, eff, u, L, dense_indices(idx, eff));
}

double id_estimate(double I2, int K) {
    if (K < 2) throw DomainError("outcome count must be >= 2");
    if (I2 > 1.0 + 1e-12 || I2 < (1.0 / K) * (1.0 - 1e-9))
        throw InfeasibleIndex("index of coincidence out of [1/K, 1]");
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= K - 1; ++k) {
        double step = std::log((k + 1.0) / k);
        double v = std::log(k + 1.0) + k * step * (1.0 - (k + 1.0) * I2);
        if (v > best) best = v;
    }
    return best;
}

double mub_bound(double purity) {
    if (purity < 0.5 - 1e-12 || purity > 1.0 + 1e-12)
        throw DomainError("qubit purity must lie in [1/2, 1]");
    return (2.0 - purity) / 3.0 * std::log(4.0);
}

ConjectureCheck tsan1_check(const ProbabilityVector& p, int n) {
    if (n < 2 || n > kChebDegreeCap)
        throw DegreeOutOfRange("conjecture degree must be in 2..15");
    const auto sums = dd::power_sums(p.probs(), n);
    const auto& c = family_dd(Family::ChebyshevC, n);
    dd_real acc{0.0};
    for (int s = 2; s <= n; ++s) {
        // H_s = (I^(s) - 1)/(1 - s)
        dd_real hs = dd::mul(dd::add(sums[s], -1.0), 1.0 / (1.0 - s));
        acc = dd::add(acc, dd::mul(c[s], hs));
    }
    const double pref = ((n % 2 == 0) ? 1.0 : -1.0) / (2.0 * n * n);
    double rhs = dd::mul(acc, pref).value();
    double lhs = shannon_entropy(p);
    return {lhs, rhs, lhs >= rhs - 1e-12};
}

}  // namespace entb
