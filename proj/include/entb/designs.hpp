#pragma once

// Qubit quantum designs, their POVMs, and the moment machinery that turns
// state moments tr(rho^s) into power sums of outcome probabilities.

#include "entb/bounds.hpp"
#include "entb/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace entb {

using Vec3 = std::array<double, 3>;

struct MomentVector {
    int d;
    int t;
    std::vector<double> values;  // values[s-1] = tr(rho^s), s = 1..t

    MomentVector(int d, int t, std::vector<double> values);
    double at(int s) const;
};

class QuantumState {
public:
    static QuantumState from_bloch(const Vec3& r);
    static QuantumState from_matrix(const Eigen::MatrixXcd& rho);
    static QuantumState from_eigenvalues(std::vector<double> eigs);
    static QuantumState maximally_mixed(int d);

    int dim() const { return dim_; }
    bool has_bloch() const { return has_bloch_; }
    const Vec3& bloch() const;
    const std::vector<double>& eigenvalues() const { return eigs_; }  // descending
    double min_eigenvalue() const { return eigs_.back(); }
    double moment(int s) const;  // tr(rho^s)
    MomentVector moments(int t) const;

private:
    QuantumState() = default;
    int dim_ = 0;
    bool has_bloch_ = false;
    Vec3 bloch_{0, 0, 0};
    std::vector<double> eigs_;
};

struct QuantumDesign {
    int dim = 2;
    int strength = 0;                       // t
    std::vector<Vec3> vectors;              // unit Bloch vectors
    std::vector<std::vector<int>> partition;  // optional split into M POVMs
    double tolerance = 1e-9;                // verification tolerance
    std::string name;

    int K() const { return static_cast<int>(vectors.size()); }
    int groups() const { return partition.empty() ? 1 : static_cast<int>(partition.size()); }
    int group_size() const { return K() / groups(); }
};

enum class DesignName { Octahedron, Icosahedron, Icosidodecahedron, McLarenSnubCube, Mub3 };

QuantumDesign builtin_design(DesignName name);
QuantumDesign builtin_design(const std::string& name);

// Order-t frame potential (1/K^2) sum_{j,k} |<phi_j|phi_k>|^(2t).
double frame_potential(const QuantumDesign& design, int t);

// Haar average of |<psi|psi'>|^(2t) in dimension d: 1/binom(d+t-1, t).
Rational haar_moment(int t, int d);
double haar_moment_d(int t, int d);

struct DesignCheck {
    bool is_design;
    double defect;  // frame potential minus the Haar value at the declared t
};

DesignCheck verify_design(const QuantumDesign& design);

// Outcome distributions p_j = (d/l) <phi_j|rho|phi_j>, one per POVM group.
std::vector<ProbabilityVector> povm_probabilities(const QuantumDesign& design,
                                                  const QuantumState& rho);

// tr(rho^{tensor s} P_sym) as the complete homogeneous symmetric polynomial
// of the eigenvalues, from power sums by the Newton-style recursion.
double moments_to_hsym(const MomentVector& m, int s);

// Design power-sum quantity: ell^(1-s) d^s * haar_moment(s,d) * hsym(rho, s)
// (per_group) or the same with ell -> K.
double beta_bar(const QuantumDesign& design, const QuantumState& rho, int s, bool per_group);

// Orbit of a seed direction under the 24 chiral octahedral rotations.
QuantumDesign octahedral_orbit_design(double theta, double phi, int strength, double tolerance);

// Two-angle search for the 24-point 7-design (deformed snub cube).
QuantumDesign find_snub_cube_design();

// Seed angles of the regular snub cube (a 3-design, not a 7-design).
std::pair<double, double> regular_snub_cube_seed();

}  // namespace entb
