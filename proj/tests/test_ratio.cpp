#include "capax/ratio.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace capax;

TEST_CASE("ratio_ellipsoid examples") {
    CHECK(ratio_ellipsoid(Ellipsoid::finite({1, 2}), 2).nth_power == 2);
    CHECK(ratio_ellipsoid(Ellipsoid::finite({2, 2}), 3).nth_power == 4);
    CHECK(ratio_ellipsoid(Ellipsoid::finite({1, 1}), 1).nth_power == 1);
    CHECK_THROWS_AS(
        ratio_ellipsoid(Ellipsoid({ExtRational(Rational(1)), ExtRational::infinity()}), 1),
        std::domain_error);
}

TEST_CASE("ratio_toric examples") {
    CHECK(ratio_toric(polydisk_profile(1, 1), 3).nth_power == Rational(9, 2));
    CHECK(ratio_toric(ellipsoid_profile(2, 3, ProfileKind::Convex), 4).nth_power == 6);
    CHECK(ratio_toric(ellipsoid_profile(1, 1, ProfileKind::Concave), 1).nth_power == 1);
}

TEST_CASE("approx tracks the exact power") {
    RatioValue r = ratio_toric(polydisk_profile(1, 1), 2);
    CHECK(r.dim_half == 2);
    CHECK(std::abs(r.approx - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(r.approx * r.approx - to_double(r.nth_power)) < 1e-9);
}

TEST_CASE("polydisk closed form examples") {
    CHECK(ratio_polydisk_closed_form(1, 1, 2).nth_power == 2);
    CHECK(ratio_polydisk_closed_form(1, 1, 3).nth_power == Rational(9, 2));
    CHECK(ratio_polydisk_closed_form(2, 1, 1).nth_power == Rational(1, 4));
    CHECK_THROWS_AS(ratio_polydisk_closed_form(0, 1, 1), std::domain_error);
}

TEST_CASE("polydisk closed form equals the toric route") {
    test::RatGen gen(59);
    for (int trial = 0; trial < 30; ++trial) {
        Rational a = gen.positive(10, 6), b = gen.positive(10, 6);
        std::int64_t k = gen.integer(1, 25);
        CHECK(ratio_polydisk_closed_form(a, b, k).nth_power ==
              ratio_toric(polydisk_profile(a, b), k).nth_power);
    }
}

TEST_CASE("ratios are scale invariant") {
    test::RatGen gen(61);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = gen.positive(8, 5), b = gen.positive(8, 5);
        Rational c = gen.positive(6, 4);
        std::int64_t k = gen.integer(1, 15);
        CHECK(ratio_ellipsoid(Ellipsoid::finite({a, b}), k).nth_power ==
              ratio_ellipsoid(Ellipsoid::finite({a * c, b * c}), k).nth_power);
        CHECK(ratio_toric(polydisk_profile(a, b), k).nth_power ==
              ratio_toric(scale(polydisk_profile(a, b), c), k).nth_power);
    }
}

TEST_CASE("crossover against the best ellipsoid") {
    CHECK(crossover_check(1) == Ordering::Less);
    CHECK(crossover_check(2) == Ordering::Equal);
    CHECK(crossover_check(3) == Ordering::Greater);
    for (std::int64_t k = 3; k <= 100; ++k) CHECK(crossover_check(k) == Ordering::Greater);
}
