#pragma once

// Uncertainty and certainty relations for design-structured POVMs: two-sided
// bounds on the (average) measurement entropy, state-independent lower
// bounds, steering bounds, the average max-probability cap, and von Neumann
// entropy bounds from state moments.

#include "entb/bounds.hpp"
#include "entb/designs.hpp"

#include <cstdint>

namespace entb {

struct RelationResult {
    Method method;
    double lower;            // nats
    double upper;            // nats
    double upsilon;          // min{M * Upsilon_{K-1}^{(t)}(beta^(t)), 1}
    bool clipped;            // whether the min clipped at 1
    double average_entropy;  // (1/M) sum_m H_1 of the supplied state
};

RelationResult prop2_bounds(const QuantumDesign& design, const QuantumState& rho, Method method);

// Lower bound evaluated at the pure-state moment values.
double pure_state_lower_bounds(const QuantumDesign& design, Method method);

struct StateIndependenceReport {
    bool holds;
    double worst_margin;  // min over samples of (average entropy - pure bound)
};

// Samples Hilbert-Schmidt random qubit states and checks that the pure-state
// bound stays below the measured average entropy.
StateIndependenceReport state_independent_check(const QuantumDesign& design, Method method,
                                                int samples, std::uint64_t seed);

struct SteeringBound {
    double value;
    bool certified;  // state independence re-verified for this design/method
};

// Right-hand side of the steering inequality; equals the state-independent
// pure-state bound. certify_samples = 0 skips certification and flags the
// value as not certified.
SteeringBound steering_bounds(const QuantumDesign& design, Method method,
                              int certify_samples = 10000, std::uint64_t seed = 20240901ULL);

struct MaxProbCheck {
    double bound;     // Upsilon_{l-1}^{(t)}(beta_l^(t)(rho))
    double measured;  // (1/M) sum_m max_j p_j
};

MaxProbCheck average_maxprob_bound(const QuantumDesign& design, const QuantumState& rho);

// Two-sided von Neumann entropy bounds from tr(rho^s), s = 2..t.
TwoSidedBound von_neumann_bounds(const MomentVector& m, Method method);

}  // namespace entb
