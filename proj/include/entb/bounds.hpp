#pragma once

// Two-sided Shannon entropy estimates from known power sums of
// probabilities, plus the maximal-probability root Upsilon and reference
// lower bounds (information diagram, MUB).

#include "entb/dd.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace entb {

class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> probs);

    const std::vector<double>& probs() const { return probs_; }
    int L() const { return static_cast<int>(probs_.size()); }

private:
    std::vector<double> probs_;
};

// Power sums I^(s) = sum_j p_j^s for s = 2..degree. Values are carried as
// two-term compensated numbers so that the large estimator coefficients do
// not amplify representation noise; plain doubles are accepted as exact.
class IndexVector {
public:
    IndexVector(int degree, std::vector<double> values);
    IndexVector(int degree, std::vector<dd_real> values);

    int degree() const { return degree_; }
    double at(int s) const;          // s in 2..degree
    const dd_real& at_dd(int s) const;

private:
    void validate() const;
    int degree_;
    std::vector<dd_real> values_;
};

enum class Method { Taylor, Chebyshev };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct TwoSidedBound {
    double lower;    // nats
    double upper;    // nats
    double upsilon;  // max-probability cap used for the rescaling
    Method method;
    int degree;
};

double shannon_entropy(const ProbabilityVector& p);              // nats
double tsallis_entropy(const ProbabilityVector& p, int s);       // (I^(s)-1)/(1-s)
double index_coincidence(const ProbabilityVector& p, int s);     // sum p^s
IndexVector indices_of(const ProbabilityVector& p, int n);

// Maximal real root of (1-y)^n + (L-1)^(n-1) y^n = (L-1)^(n-1) I, the upper
// bound on max_j p_j given I^(n) = I over L outcomes. Lies in [1/L, 1].
double upsilon_root(int L, int n, double I);

// Closed form of the n = 2 root (used as an oracle).
double upsilon_root2_closed(int L, double I2);

TwoSidedBound prop1_taylor(const IndexVector& idx, int L);
TwoSidedBound prop1_chebyshev(const IndexVector& idx, int L);

// Information-diagram lower bound on H_1 from I^(2), maximized over its
// integer parameter k = 1..K-1 (ties resolved toward smaller k).
double id_estimate(double I2, int K);

// Averaged MUB bound for three qubit bases: (2 - purity)/3 * ln 4.
double mub_bound(double purity);

struct ConjectureCheck {
    double lhs;   // H_1
    double rhs;   // Chebyshev-weighted combination of Tsallis entropies
    bool holds;
};

// H_1(p) >= (-1)^n/(2n^2) sum_{s=2..n} c_n^(s) H_s(p), degree 2..15.
ConjectureCheck tsan1_check(const ProbabilityVector& p, int n);

// Shared evaluator for all Proposition-style bounds: indices[s-1] = I^(s)
// with indices[0] = 1, evaluated at a caller-supplied Upsilon and outcome
// count. Sums are accumulated in compensated arithmetic.
TwoSidedBound two_sided_from_indices(Method method, int degree, double upsilon, int outcomes,
                                     const std::vector<dd_real>& indices);

}  // namespace entb
