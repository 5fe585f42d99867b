#include "entb/designs.hpp"

#include "entb/errors.hpp"
#include "entb/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace entb;

TEST_CASE("built-in designs have the declared shape") {
    auto oct = builtin_design(DesignName::Octahedron);
    CHECK(oct.K() == 6);
    CHECK(oct.strength == 3);
    auto ico = builtin_design("icosahedron");
    CHECK(ico.K() == 12);
    CHECK(ico.strength == 5);
    CHECK(builtin_design("icosidodecahedron").K() == 30);
    auto mub = builtin_design(DesignName::Mub3);
    CHECK(mub.groups() == 3);
    CHECK(mub.group_size() == 2);
    CHECK_THROWS_AS(builtin_design("tetrahedron"), UnknownDesign);
    for (const auto& v : ico.vectors)
        CHECK(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("frame potentials of the octahedron") {
    auto oct = builtin_design(DesignName::Octahedron);
    CHECK(frame_potential(oct, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(frame_potential(oct, 2) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(frame_potential(oct, 3) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(verify_design(oct).is_design);
    auto oct4 = oct;
    oct4.strength = 4;
    CHECK_FALSE(verify_design(oct4).is_design);
}

TEST_CASE("five-point Haar averages") {
    CHECK(haar_moment(1, 5) == Rational(1, 5));
    CHECK(haar_moment(3, 2) == Rational(1, 4));
    CHECK(haar_moment(7, 2) == Rational(1, 8));
    CHECK(haar_moment(5, 2) == Rational(1, 6));
}

TEST_CASE("strength-5 designs") {
    for (auto name : {DesignName::Icosahedron, DesignName::Icosidodecahedron}) {
        auto d = builtin_design(name);
        CHECK(std::fabs(frame_potential(d, 5) - 1.0 / 6) <= 1e-9);
        auto nxt = d;
        nxt.strength = 6;
        CHECK_FALSE(verify_design(nxt).is_design);
    }
}

TEST_CASE("POVM probabilities for the octahedron") {
    auto oct = builtin_design(DesignName::Octahedron);
    QuantumState pure = QuantumState::from_bloch({0.0, 0.0, 1.0});
    auto dists = povm_probabilities(oct, pure);
    REQUIRE(dists.size() == 1);
    const auto& p = dists[0].probs();
    CHECK(p[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-14));
    for (int j = 2; j < 6; ++j) CHECK(p[j] == doctest::Approx(1.0 / 6).epsilon(1e-14));

    QuantumState mixed = QuantumState::maximally_mixed(2);
    for (const auto& d : {oct, builtin_design(DesignName::Icosahedron)})
        for (const auto& dist : povm_probabilities(d, mixed))
            for (double v : dist.probs())
                CHECK(v == doctest::Approx(1.0 / d.group_size()).epsilon(1e-12));

    auto mub = builtin_design(DesignName::Mub3);
    auto pairs = povm_probabilities(mub, mixed);
    REQUIRE(pairs.size() == 3);
    for (const auto& pair : pairs) {
        CHECK(pair.probs()[0] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(pair.probs()[1] == doctest::Approx(0.5).epsilon(1e-14));
    }
    CHECK_THROWS_AS(povm_probabilities(oct, QuantumState::maximally_mixed(3)), DimensionError);
}

TEST_CASE("matrix and Bloch constructions agree") {
    Eigen::Matrix2cd rho;
    using namespace std::complex_literals;
    rho << 0.75, 0.1 - 0.2i, 0.1 + 0.2i, 0.25;
    QuantumState st = QuantumState::from_matrix(rho);
    CHECK(st.bloch()[0] == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(st.bloch()[1] == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(st.bloch()[2] == doctest::Approx(0.5).epsilon(1e-13));
    QuantumState same = QuantumState::from_bloch({0.2, 0.4, 0.5});
    CHECK(st.moment(2) == doctest::Approx(same.moment(2)).epsilon(1e-13));
    CHECK(st.min_eigenvalue() == doctest::Approx(same.min_eigenvalue()).epsilon(1e-13));

    Eigen::Matrix2cd bad;
    bad << 1.2, 0.0, 0.0, -0.2;
    CHECK_THROWS_AS(QuantumState::from_matrix(bad), DomainError);
    CHECK_THROWS_AS(QuantumState::from_bloch({1.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("complete homogeneous values from moments") {
    QuantumState pure = QuantumState::from_bloch({0.0, 1.0, 0.0});
    for (int s : {1, 2, 3})
        CHECK(moments_to_hsym(pure.moments(3), s) == doctest::Approx(1.0).epsilon(1e-13));
    QuantumState mixed = QuantumState::maximally_mixed(2);
    CHECK(moments_to_hsym(mixed.moments(2), 2) == doctest::Approx(0.75).epsilon(1e-13));
    // eigenvalue (l, 1-l): h_2 = l^2 + l(1-l) + (1-l)^2
    QuantumState st = QuantumState::from_eigenvalues({0.7, 0.3});
    CHECK(moments_to_hsym(st.moments(2), 2) ==
          doctest::Approx(0.49 + 0.21 + 0.09).epsilon(1e-13));
    CHECK_THROWS_AS(moments_to_hsym(st.moments(2), 3), InsufficientMoments);
}

TEST_CASE("design power sums against explicit distributions") {
    auto oct = builtin_design(DesignName::Octahedron);
    QuantumState pure = QuantumState::from_bloch({0.0, 0.0, 1.0});
    CHECK(beta_bar(oct, pure, 2, true) == doctest::Approx(2.0 / 9).epsilon(1e-13));
    CHECK(beta_bar(oct, pure, 3, true) == doctest::Approx(1.0 / 18).epsilon(1e-13));
    std::mt19937_64 rng = stream_rng(3, 14);
    for (int i = 0; i < 50; ++i) {
        QuantumState rho = QuantumState::from_bloch(random_bloch_ball(rng));
        for (const auto& d : {oct, builtin_design(DesignName::Mub3),
                              builtin_design(DesignName::Icosahedron)})
            for (int s = 2; s <= d.strength; ++s) {
                double lhs = 0.0;
                for (const auto& dist : povm_probabilities(d, rho))
                    lhs += index_coincidence(dist, s);
                CHECK(lhs == doctest::Approx(d.groups() * beta_bar(d, rho, s, true)).epsilon(1e-10));
            }
    }
    CHECK_THROWS_AS(beta_bar(oct, pure, 4, true), DegreeOutOfRange);
}

TEST_CASE("snub cube orbits") {
    auto [theta, phi] = regular_snub_cube_seed();
    auto regular = octahedral_orbit_design(theta, phi, 3, 1e-9);
    CHECK(regular.K() == 24);
    CHECK(verify_design(regular).is_design);  // 3-design
    auto four = regular;
    four.strength = 4;
    four.tolerance = 1e-6;
    CHECK_FALSE(verify_design(four).is_design);

    auto mclaren = find_snub_cube_design();
    CHECK(mclaren.K() == 24);
    CHECK(std::fabs(frame_potential(mclaren, 7) - 0.125) <= 1e-6);
    auto eight = mclaren;
    eight.strength = 8;
    CHECK_FALSE(verify_design(eight).is_design);
    // all 24 vectors unit and distinct
    for (int j = 0; j < 24; ++j)
        for (int k = j + 1; k < 24; ++k) {
            double d0 = mclaren.vectors[j][0] - mclaren.vectors[k][0];
            double d1 = mclaren.vectors[j][1] - mclaren.vectors[k][1];
            double d2 = mclaren.vectors[j][2] - mclaren.vectors[k][2];
            CHECK(d0 * d0 + d1 * d1 + d2 * d2 > 1e-6);
        }
}

TEST_CASE("moment vector validation") {
    CHECK_THROWS_AS(MomentVector(2, 2, {0.9, 0.5}), InfeasibleIndex);
    CHECK_THROWS_AS(MomentVector(2, 2, {1.0, 1.2}), InfeasibleIndex);
    CHECK_THROWS_AS(MomentVector(2, 2, {1.0, 0.3}), InfeasibleIndex);  // below 1/d
    MomentVector ok(2, 3, {1.0, 0.6, 0.4});
    CHECK(ok.at(3) == 0.4);
}
