#include "entb/relations.hpp"

#include "entb/errors.hpp"
#include "entb/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace entb;

TEST_CASE("bounds collapse at the maximally mixed state") {
    QuantumState mixed = QuantumState::maximally_mixed(2);
    for (auto name : {DesignName::Octahedron, DesignName::Mub3, DesignName::Icosahedron,
                      DesignName::Icosidodecahedron}) {
        auto d = builtin_design(name);
        double lnl = std::log(static_cast<double>(d.group_size()));
        for (Method m : {Method::Taylor, Method::Chebyshev}) {
            RelationResult r = prop2_bounds(d, mixed, m);
            CHECK(r.lower == doctest::Approx(lnl).epsilon(1e-10));
            CHECK(r.upper == doctest::Approx(lnl).epsilon(1e-10));
            CHECK(r.average_entropy == doctest::Approx(lnl).epsilon(1e-12));
        }
    }
}

TEST_CASE("octahedron pure state intervals") {
    auto oct = builtin_design(DesignName::Octahedron);
    QuantumState pure = QuantumState::from_bloch({0.0, 0.0, 1.0});
    double h = 2.0 / 3 * std::log(6.0) + std::log(3.0) / 3;
    for (Method m : {Method::Taylor, Method::Chebyshev}) {
        RelationResult r = prop2_bounds(oct, pure, m);
        CHECK(r.lower <= h + 1e-12);
        CHECK(h <= r.upper + 1e-12);
        CHECK_FALSE(r.clipped);
        CHECK(r.upsilon == doctest::Approx(0.35525).epsilon(1e-3));
        CHECK(r.average_entropy == doctest::Approx(h).epsilon(1e-13));
    }
}

TEST_CASE("MUB partition clips the probability cap at a pure state") {
    auto mub = builtin_design(DesignName::Mub3);
    QuantumState pure = QuantumState::from_bloch({0.0, 0.0, 1.0});
    RelationResult r = prop2_bounds(mub, pure, Method::Chebyshev);
    CHECK(r.clipped);
    CHECK(r.upsilon == 1.0);
    // average over the three bases: basis along z is deterministic
    CHECK(r.average_entropy == doctest::Approx(2.0 / 3 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("pure-state lower bounds") {
    CHECK(pure_state_lower_bounds(builtin_design(DesignName::Mub3), Method::Taylor) ==
          doctest::Approx(5.0 / 12).epsilon(1e-13));
    for (auto name : {DesignName::Octahedron, DesignName::Icosahedron}) {
        auto d = builtin_design(name);
        for (Method m : {Method::Taylor, Method::Chebyshev})
            CHECK(pure_state_lower_bounds(d, m) <
                  std::log(static_cast<double>(d.group_size())));
    }
}

TEST_CASE("state independence on a desk-scale sample") {
    for (auto name : {DesignName::Octahedron, DesignName::Mub3}) {
        auto d = builtin_design(name);
        for (Method m : {Method::Taylor, Method::Chebyshev}) {
            auto rep = state_independent_check(d, m, 2000, 99);
            CHECK(rep.holds);
            CHECK(rep.worst_margin >= -1e-10);
        }
    }
}

TEST_CASE("steering bound equals the pure-state bound") {
    auto mub = builtin_design(DesignName::Mub3);
    SteeringBound s = steering_bounds(mub, Method::Taylor, 500, 7);
    CHECK(s.value == doctest::Approx(5.0 / 12).epsilon(1e-13));
    CHECK(s.certified);
    SteeringBound uncert = steering_bounds(mub, Method::Taylor, 0, 7);
    CHECK_FALSE(uncert.certified);
    CHECK(uncert.value == s.value);
    CHECK(s.value < std::log(2.0));
}

TEST_CASE("average maximal probability cap") {
    auto mub = builtin_design(DesignName::Mub3);
    QuantumState pure = QuantumState::from_bloch({0.0, 0.0, 1.0});
    MaxProbCheck c = average_maxprob_bound(mub, pure);
    CHECK(c.bound == doctest::Approx((3.0 + std::sqrt(3.0)) / 6).epsilon(1e-12));
    CHECK(c.measured == doctest::Approx(2.0 / 3).epsilon(1e-13));
    CHECK(c.measured <= c.bound);

    auto oct = builtin_design(DesignName::Octahedron);
    CHECK(average_maxprob_bound(oct, pure).measured == doctest::Approx(1.0 / 3).epsilon(1e-13));
    QuantumState mixed = QuantumState::maximally_mixed(2);
    MaxProbCheck mix = average_maxprob_bound(oct, mixed);
    CHECK(mix.measured == doctest::Approx(1.0 / 6).epsilon(1e-13));
    CHECK(mix.measured <= mix.bound + 1e-12);
}

TEST_CASE("von Neumann entropy bounds") {
    TwoSidedBound pure = von_neumann_bounds(MomentVector(2, 3, {1.0, 1.0, 1.0}), Method::Taylor);
    CHECK(pure.lower == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(pure.upper == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(pure.upsilon == 1.0);

    for (Method m : {Method::Taylor, Method::Chebyshev}) {
        TwoSidedBound mixed = von_neumann_bounds(MomentVector(2, 3, {1.0, 0.5, 0.25}), m);
        CHECK(mixed.lower == doctest::Approx(std::log(2.0)).epsilon(1e-11));
        CHECK(mixed.upper == doctest::Approx(std::log(2.0)).epsilon(1e-11));
    }

    std::mt19937_64 rng = stream_rng(31, 8);
    std::uniform_int_distribution<int> d_dist(2, 6), t_dist(2, 7);
    for (int i = 0; i < 500; ++i) {
        int d = d_dist(rng), t = t_dist(rng);
        QuantumState rho = QuantumState::from_eigenvalues(random_distribution(rng, d));
        double h = 0.0;
        for (double lam : rho.eigenvalues())
            if (lam > 0) h -= lam * std::log(lam);
        for (Method m : {Method::Taylor, Method::Chebyshev}) {
            TwoSidedBound b = von_neumann_bounds(rho.moments(t), m);
            CHECK(b.lower <= h + 1e-10);
            CHECK(h <= b.upper + 1e-10);
        }
    }
}
