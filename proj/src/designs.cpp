#include "entb/designs.hpp"

#include "entb/errors.hpp"
#include "entb/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace entb {

namespace {

double pow_int(double base, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 normalized(const Vec3& v) {
    double n = std::sqrt(dot(v, v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

MomentVector::MomentVector(int d_, int t_, std::vector<double> values_)
    : d(d_), t(t_), values(std::move(values_)) {
    if (d < 2) throw DimensionError("dimension must be >= 2");
    if (t < 1 || static_cast<int>(values.size()) != t)
        throw InsufficientMoments("moment vector must carry tr(rho^1)..tr(rho^t)");
    if (std::fabs(values[0] - 1.0) > 1e-12) throw InfeasibleIndex("tr(rho) must equal 1");
    double prev = 1.0 + 1e-9;
    for (int s = 1; s <= t; ++s) {
        double v = values[s - 1];
        if (v > 1.0 + 1e-9 || v < pow_int(1.0 / d, s - 1) * (1.0 - 1e-9) - 1e-15)
            throw InfeasibleIndex("tr(rho^" + std::to_string(s) + ") out of range");
        if (v > prev + 1e-9) throw InfeasibleIndex("moments must be nonincreasing");
        prev = v;
    }
}

double MomentVector::at(int s) const {
    if (s < 1 || s > t) throw InsufficientMoments("moment order out of range");
    return values[s - 1];
}

QuantumState QuantumState::from_bloch(const Vec3& r) {
    double norm = std::sqrt(dot(r, r));
    if (norm > 1.0 + 1e-12) throw DomainError("Bloch vector length exceeds 1");
    norm = std::min(norm, 1.0);
    QuantumState st;
    st.dim_ = 2;
    st.has_bloch_ = true;
    st.bloch_ = r;
    st.eigs_ = {0.5 * (1.0 + norm), 0.5 * (1.0 - norm)};
    return st;
}

QuantumState QuantumState::from_matrix(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 2)
        throw DimensionError("density matrix must be square with dimension >= 2");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw DomainError("density matrix must be Hermitian");
    if (std::fabs(rho.trace().real() - 1.0) > 1e-12 || std::fabs(rho.trace().imag()) > 1e-12)
        throw DomainError("density matrix must have unit trace");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    QuantumState st;
    st.dim_ = static_cast<int>(rho.rows());
    st.eigs_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + rho.rows());
    std::sort(st.eigs_.rbegin(), st.eigs_.rend());
    if (st.eigs_.back() < -1e-12) throw DomainError("density matrix must be positive semidefinite");
    if (st.dim_ == 2) {
        st.has_bloch_ = true;
        st.bloch_ = {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
                     (rho(0, 0) - rho(1, 1)).real()};
    }
    return st;
}

QuantumState QuantumState::from_eigenvalues(std::vector<double> eigs) {
    if (eigs.size() < 2) throw DimensionError("need at least two eigenvalues");
    double total = 0.0;
    for (double v : eigs) {
        if (v < -1e-12) throw DomainError("eigenvalues must be nonnegative");
        total += v;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw DomainError("eigenvalues must sum to 1");
    QuantumState st;
    st.dim_ = static_cast<int>(eigs.size());
    st.eigs_ = std::move(eigs);
    std::sort(st.eigs_.rbegin(), st.eigs_.rend());
    return st;
}

QuantumState QuantumState::maximally_mixed(int d) {
    if (d < 2) throw DimensionError("dimension must be >= 2");
    if (d == 2) return from_bloch({0.0, 0.0, 0.0});
    return from_eigenvalues(std::vector<double>(d, 1.0 / d));
}

const Vec3& QuantumState::bloch() const {
    if (!has_bloch_) throw DomainError("state has no Bloch representation");
    return bloch_;
}

double QuantumState::moment(int s) const {
    if (s < 1) throw InsufficientMoments("moment order must be >= 1");
    return dd::power_sums(eigs_, s)[s].value();
}

MomentVector QuantumState::moments(int t) const {
    auto sums = dd::power_sums(eigs_, t);
    std::vector<double> vals(t);
    for (int s = 1; s <= t; ++s) vals[s - 1] = sums[s].value();
    return MomentVector(dim_, t, std::move(vals));
}

namespace {

std::vector<Vec3> octahedron_vectors() {
    return {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
}

Vec3 cyclic(const Vec3& v, int shift) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[(i + shift) % 3] = v[i];
    return out;
}

std::vector<Vec3> icosahedron_vectors() {
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    std::vector<Vec3> out;
    for (int shift = 0; shift < 3; ++shift)
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0})
                out.push_back(normalized(cyclic({0.0, s1, s2 * phi}, shift)));
    return out;
}

std::vector<Vec3> icosidodecahedron_vectors() {
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    std::vector<Vec3> out;
    for (int shift = 0; shift < 3; ++shift)
        for (double s : {1.0, -1.0}) out.push_back(cyclic({0.0, 0.0, s}, shift));
    for (int shift = 0; shift < 3; ++shift)
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0})
                for (double s3 : {1.0, -1.0})
                    out.push_back(normalized(cyclic({s1 * 0.5, s2 * 0.5 * phi, s3 * 0.5 * phi * phi}, shift)));
    return out;
}

// The 24 chiral octahedral rotations as signed coordinate permutations:
// permutation parity times sign product must be +1.
struct SignedPerm {
    std::array<int, 3> perm;
    std::array<double, 3> sign;
};

const std::vector<SignedPerm>& cube_rotations() {
    static const std::vector<SignedPerm> rots = [] {
        const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                          {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
        const std::array<int, 6> parity = {1, 1, 1, -1, -1, -1};
        std::vector<SignedPerm> out;
        for (int p = 0; p < 6; ++p)
            for (int mask = 0; mask < 8; ++mask) {
                std::array<double, 3> sign;
                int prod = 1;
                for (int i = 0; i < 3; ++i) {
                    sign[i] = (mask >> i) & 1 ? -1.0 : 1.0;
                    prod *= (mask >> i) & 1 ? -1 : 1;
                }
                if (parity[p] * prod == 1) out.push_back({perms[p], sign});
            }
        return out;
    }();
    return rots;
}

std::vector<Vec3> octahedral_orbit(double theta, double phi) {
    const Vec3 seed = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                       std::cos(theta)};
    std::vector<Vec3> out;
    out.reserve(24);
    for (const auto& r : cube_rotations())
        out.push_back({r.sign[0] * seed[r.perm[0]], r.sign[1] * seed[r.perm[1]],
                       r.sign[2] * seed[r.perm[2]]});
    return out;
}

double orbit_frame_potential7(double theta, double phi) {
    auto vecs = octahedral_orbit(theta, phi);
    const int K = static_cast<int>(vecs.size());
    double acc = K;  // diagonal terms
    for (int j = 0; j < K; ++j)
        for (int k = j + 1; k < K; ++k) acc += 2.0 * pow_int(0.5 * (1.0 + dot(vecs[j], vecs[k])), 7);
    return acc / (static_cast<double>(K) * K);
}

// Nelder-Mead on two parameters.
std::pair<std::array<double, 2>, double> nelder_mead2(
    const std::function<double(double, double)>& f, std::array<double, 2> start, double scale,
    int max_iter) {
    std::array<std::array<double, 2>, 3> pts = {start,
                                                {start[0] + scale, start[1]},
                                                {start[0], start[1] + scale}};
    std::array<double, 3> val;
    for (int i = 0; i < 3; ++i) val[i] = f(pts[i][0], pts[i][1]);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::array<int, 3> order = {0, 1, 2};
        std::sort(order.begin(), order.end(), [&](int a, int b) { return val[a] < val[b]; });
        const auto &best = pts[order[0]], &mid = pts[order[1]];
        auto& worst = pts[order[2]];
        double spread = std::max({std::fabs(best[0] - worst[0]), std::fabs(best[1] - worst[1]),
                                  std::fabs(mid[0] - worst[0])});
        if (spread < 1e-13) break;
        std::array<double, 2> centroid = {0.5 * (best[0] + mid[0]), 0.5 * (best[1] + mid[1])};
        auto propose = [&](double coef) -> std::array<double, 2> {
            return {centroid[0] + coef * (centroid[0] - worst[0]),
                    centroid[1] + coef * (centroid[1] - worst[1])};
        };
        auto refl = propose(1.0);
        double f_refl = f(refl[0], refl[1]);
        if (f_refl < val[order[0]]) {
            auto exp_pt = propose(2.0);
            double f_exp = f(exp_pt[0], exp_pt[1]);
            if (f_exp < f_refl) { worst = exp_pt; val[order[2]] = f_exp; }
            else { worst = refl; val[order[2]] = f_refl; }
        } else if (f_refl < val[order[1]]) {
            worst = refl;
            val[order[2]] = f_refl;
        } else {
            auto contr = propose(f_refl < val[order[2]] ? 0.5 : -0.5);
            double f_con = f(contr[0], contr[1]);
            if (f_con < std::min(f_refl, val[order[2]])) {
                worst = contr;
                val[order[2]] = f_con;
            } else {  // shrink toward the best point
                for (int i : {order[1], order[2]}) {
                    pts[i] = {0.5 * (pts[i][0] + best[0]), 0.5 * (pts[i][1] + best[1])};
                    val[i] = f(pts[i][0], pts[i][1]);
                }
            }
        }
    }
    int argmin = 0;
    for (int i = 1; i < 3; ++i)
        if (val[i] < val[argmin]) argmin = i;
    return {pts[argmin], val[argmin]};
}

}  // namespace

QuantumDesign builtin_design(DesignName name) {
    switch (name) {
        case DesignName::Octahedron:
            return {2, 3, octahedron_vectors(), {}, 1e-9, "octahedron"};
        case DesignName::Icosahedron:
            return {2, 5, icosahedron_vectors(), {}, 1e-9, "icosahedron"};
        case DesignName::Icosidodecahedron:
            return {2, 5, icosidodecahedron_vectors(), {}, 1e-9, "icosidodecahedron"};
        case DesignName::McLarenSnubCube:
            return find_snub_cube_design();
        case DesignName::Mub3:
            return {2, 3, octahedron_vectors(), {{0, 1}, {2, 3}, {4, 5}}, 1e-9, "mub3"};
    }
    throw UnknownDesign("unknown design");
}

QuantumDesign builtin_design(const std::string& name) {
    if (name == "octahedron") return builtin_design(DesignName::Octahedron);
    if (name == "icosahedron") return builtin_design(DesignName::Icosahedron);
    if (name == "icosidodecahedron") return builtin_design(DesignName::Icosidodecahedron);
    if (name == "mclaren_snub_cube") return builtin_design(DesignName::McLarenSnubCube);
    if (name == "mub3") return builtin_design(DesignName::Mub3);
    throw UnknownDesign("unknown design '" + name + "'");
}

double frame_potential(const QuantumDesign& design, int t) {
    if (t < 1) throw DomainError("frame potential order must be >= 1");
    const int K = design.K();
    dd_real acc{static_cast<double>(K)};
    for (int j = 0; j < K; ++j)
        for (int k = j + 1; k < K; ++k) {
            double u = 0.5 * (1.0 + dot(design.vectors[j], design.vectors[k]));
            acc = dd::add(acc, 2.0 * pow_int(u, t));
        }
    return acc.value() / (static_cast<double>(K) * K);
}

Rational haar_moment(int t, int d) {
    if (t < 1 || d < 1) throw DomainError("Haar moment needs t, d >= 1");
    return Rational(1) / Rational(binomial(d + t - 1, t));
}

double haar_moment_d(int t, int d) { return to_double(haar_moment(t, d)); }

DesignCheck verify_design(const QuantumDesign& design) {
    double defect = frame_potential(design, design.strength) -
                    haar_moment_d(design.strength, design.dim);
    return {std::fabs(defect) <= design.tolerance, defect};
}

std::vector<ProbabilityVector> povm_probabilities(const QuantumDesign& design,
                                                  const QuantumState& rho) {
    if (design.dim != rho.dim()) throw DimensionError("design and state dimensions differ");
    if (!rho.has_bloch()) throw DomainError("state needs a Bloch representation");
    const Vec3& r = rho.bloch();
    const int ell = design.group_size();
    std::vector<std::vector<int>> groups = design.partition;
    if (groups.empty()) {
        groups.emplace_back(design.K());
        for (int k = 0; k < design.K(); ++k) groups.back()[k] = k;
    }
    std::vector<ProbabilityVector> out;
    out.reserve(groups.size());
    for (const auto& group : groups) {
        std::vector<double> p;
        p.reserve(group.size());
        double total = 0.0;
        for (int k : group) {
            double v = (1.0 + dot(r, design.vectors[k])) / ell;
            v = std::max(v, 0.0);
            p.push_back(v);
            total += v;
        }
        if (std::fabs(total - 1.0) > 1e-10)
            throw CheckFailure("POVM outcome probabilities sum to " + std::to_string(total));
        for (auto& v : p) v /= total;
        out.emplace_back(std::move(p));
    }
    return out;
}

double moments_to_hsym(const MomentVector& m, int s) {
    if (s < 0 || s > m.t) throw InsufficientMoments("need moments up to order " + std::to_string(s));
    std::vector<dd_real> h(s + 1);
    h[0] = dd_real{1.0};
    for (int k = 1; k <= s; ++k) {
        dd_real acc{0.0};
        for (int j = 1; j <= k; ++j) acc = dd::add(acc, dd::mul(h[k - j], m.at(j)));
        h[k] = dd::mul(acc, 1.0 / k);
    }
    return h[s].value();
}

double beta_bar(const QuantumDesign& design, const QuantumState& rho, int s, bool per_group) {
    if (s < 2 || s > design.strength) throw DegreeOutOfRange("beta order must be in 2..t");
    if (design.dim != rho.dim()) throw DimensionError("design and state dimensions differ");
    const int ell = per_group ? design.group_size() : design.K();
    const Rational pref = rational_pow(Rational(1, ell), s - 1) *
                          rational_pow(Rational(design.dim), s) * haar_moment(s, design.dim);
    double hsym = moments_to_hsym(rho.moments(s), s);
    return dd::mul(dd::from_rational(pref), hsym).value();
}

QuantumDesign octahedral_orbit_design(double theta, double phi, int strength, double tolerance) {
    return {2, strength, octahedral_orbit(theta, phi), {}, tolerance, "octahedral_orbit"};
}

std::pair<double, double> regular_snub_cube_seed() {
    // Tribonacci constant: t^3 = t^2 + t + 1.
    double t = 1.8;
    for (int i = 0; i < 60; ++i) t = t - (t * t * t - t * t - t - 1.0) / (3.0 * t * t - 2.0 * t - 1.0);
    Vec3 v = normalized({1.0, 1.0 / t, t});
    return {std::acos(v[2]), std::atan2(v[1], v[0])};
}

namespace {

QuantumDesign search_snub_cube() {
    const double target = haar_moment_d(7, 2);
    auto objective = [&](double theta, double phi) { return orbit_frame_potential7(theta, phi); };

    std::mt19937_64 rng = stream_rng(0x6f5eedULL, 7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double best_val = std::numeric_limits<double>::infinity();
    std::array<double, 2> best_pt{0.0, 0.0};
    for (int restart = 0; restart < 64; ++restart) {
        std::array<double, 2> start = {std::acos(1.0 - 2.0 * u01(rng)),
                                       2.0 * M_PI * u01(rng)};
        auto [pt, val] = nelder_mead2(objective, start, 0.2, 400);
        if (val < best_val) { best_val = val; best_pt = pt; }
    }
    double defect = best_val - target;
    if (defect > 1e-6)
        throw ConvergenceFailure("snub-cube search stalled at defect " + std::to_string(defect));
    QuantumDesign d = octahedral_orbit_design(best_pt[0], best_pt[1], 7, 1e-6);
    d.name = "mclaren_snub_cube";
    return d;
}

}  // namespace

QuantumDesign find_snub_cube_design() {
    // deterministic (fixed restart seed), so the result is shareable
    static const QuantumDesign cached = search_snub_cube();
    return cached;
}

}  // namespace entb
