#include "entb/relations.hpp"

#include "entb/coefficients.hpp"
#include "entb/errors.hpp"
#include "entb/parallel.hpp"
#include "entb/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace entb {

namespace {

// beta-bar values as exact-prefactor dd products, s = 1..t; index 0 holds 1.
std::vector<dd_real> beta_indices(const QuantumDesign& design, const QuantumState& rho, int t,
                                  int ell) {
    MomentVector m = rho.moments(t);
    std::vector<dd_real> out(t);
    out[0] = dd_real{1.0};
    for (int s = 2; s <= t; ++s) {
        const Rational pref = rational_pow(Rational(1, ell), s - 1) *
                              rational_pow(Rational(design.dim), s) * haar_moment(s, design.dim);
        out[s - 1] = dd::mul(dd::from_rational(pref), moments_to_hsym(m, s));
    }
    return out;
}

std::vector<dd_real> pure_beta_indices(const QuantumDesign& design, int t, int ell) {
    std::vector<dd_real> out(t);
    out[0] = dd_real{1.0};
    for (int s = 2; s <= t; ++s) {
        const Rational pref = rational_pow(Rational(1, ell), s - 1) *
                              rational_pow(Rational(design.dim), s) * haar_moment(s, design.dim);
        out[s - 1] = dd::from_rational(pref);
    }
    return out;
}

double average_povm_entropy(const QuantumDesign& design, const QuantumState& rho) {
    auto dists = povm_probabilities(design, rho);
    double acc = 0.0;
    for (const auto& p : dists) acc += shannon_entropy(p);
    return acc / static_cast<double>(dists.size());
}

struct UpsilonClip {
    double value;
    bool clipped;
};

UpsilonClip clipped_upsilon(const QuantumDesign& design, double beta_t_full) {
    const int M = design.groups();
    double raw = upsilon_root(design.K(), design.strength, beta_t_full);
    double scaled = M * raw;
    if (scaled > 1.0) return {1.0, true};
    return {scaled, false};
}

}  // namespace

RelationResult prop2_bounds(const QuantumDesign& design, const QuantumState& rho, Method method) {
    if (design.dim != rho.dim()) throw DimensionError("design and state dimensions differ");
    const int t = design.strength;
    const int ell = design.group_size();
    auto idx = beta_indices(design, rho, t, ell);
    // Upsilon always comes from the full-set (K-outcome) power sum.
    auto idx_full = beta_indices(design, rho, t, design.K());
    auto u = clipped_upsilon(design, idx_full[t - 1].value());
    const int degree = method == Method::Chebyshev ? std::min(t, kChebDegreeCap) : t;
    TwoSidedBound b = two_sided_from_indices(method, degree, u.value, ell, idx);
    return {method, b.lower, b.upper, u.value, u.clipped, average_povm_entropy(design, rho)};
}

double pure_state_lower_bounds(const QuantumDesign& design, Method method) {
    const int t = design.strength;
    const int ell = design.group_size();
    auto idx = pure_beta_indices(design, t, ell);
    auto idx_full = pure_beta_indices(design, t, design.K());
    auto u = clipped_upsilon(design, idx_full[t - 1].value());
    const int degree = method == Method::Chebyshev ? std::min(t, kChebDegreeCap) : t;
    return two_sided_from_indices(method, degree, u.value, ell, idx).lower;
}

StateIndependenceReport state_independent_check(const QuantumDesign& design, Method method,
                                                int samples, std::uint64_t seed) {
    const double bound = pure_state_lower_bounds(design, method);
    const std::size_t chunk = 1024;
    const std::size_t total = samples;
    const std::size_t n_chunks = (total + chunk - 1) / chunk;
    std::vector<double> partial(n_chunks, std::numeric_limits<double>::infinity());
    parallel_chunks(total, chunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        std::mt19937_64 rng = stream_rng(seed, c);
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = begin; i < end; ++i) {
            QuantumState rho = QuantumState::from_bloch(random_bloch_ball(rng));
            worst = std::min(worst, average_povm_entropy(design, rho) - bound);
        }
        partial[c] = worst;
    });
    double worst = std::numeric_limits<double>::infinity();
    for (double w : partial) worst = std::min(worst, w);
    return {worst >= -1e-10, worst};
}

SteeringBound steering_bounds(const QuantumDesign& design, Method method, int certify_samples,
                              std::uint64_t seed) {
    double value = pure_state_lower_bounds(design, method);
    bool certified = false;
    if (certify_samples > 0)
        certified = state_independent_check(design, method, certify_samples, seed).holds;
    return {value, certified};
}

MaxProbCheck average_maxprob_bound(const QuantumDesign& design, const QuantumState& rho) {
    const int t = design.strength;
    const int ell = design.group_size();
    auto idx = beta_indices(design, rho, t, ell);
    double bound = upsilon_root(ell, t, idx[t - 1].value());
    auto dists = povm_probabilities(design, rho);
    double acc = 0.0;
    for (const auto& p : dists)
        acc += *std::max_element(p.probs().begin(), p.probs().end());
    double measured = acc / static_cast<double>(dists.size());
    if (measured > bound + 1e-10)
        throw CheckFailure("average max probability " + std::to_string(measured) +
                           " exceeds its bound " + std::to_string(bound));
    return {bound, measured};
}

TwoSidedBound von_neumann_bounds(const MomentVector& m, Method method) {
    if (m.t < 2) throw InsufficientMoments("need moments up to order 2 at least");
    double cap = upsilon_root(m.d, m.t, m.at(m.t));
    const int degree = method == Method::Chebyshev ? std::min(m.t, kChebDegreeCap) : m.t;
    std::vector<dd_real> idx(degree);
    idx[0] = dd_real{1.0};
    for (int s = 2; s <= degree; ++s) idx[s - 1] = dd_real{m.at(s)};
    return two_sided_from_indices(method, degree, cap, m.d, idx);
}

}  // namespace entb
