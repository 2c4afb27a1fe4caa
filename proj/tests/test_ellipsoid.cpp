#include "capax/ellipsoid.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace capax;

namespace {

Ellipsoid E(std::vector<Rational> params) { return Ellipsoid::finite(std::move(params)); }

Ellipsoid cylinder(Rational b) {
    return Ellipsoid({ExtRational(std::move(b)), ExtRational::infinity()});
}

std::vector<Rational> values_of(const std::vector<SpectrumEntry>& entries) {
    std::vector<Rational> out;
    for (const auto& e : entries) out.push_back(e.value);
    return out;
}

}  // namespace

TEST_CASE("ellipsoid construction") {
    CHECK_THROWS_AS(Ellipsoid({}), std::domain_error);
    CHECK_THROWS_AS(E({Rational(0), Rational(1)}), std::domain_error);
    CHECK_THROWS_AS(E({Rational(-1)}), std::domain_error);
    CHECK_THROWS_AS(Ellipsoid({ExtRational::infinity(), ExtRational::infinity()}),
                    std::domain_error);
    // parameters are stored ascending
    Ellipsoid e = E({Rational(3), Rational(1), Rational(2)});
    CHECK(e.params()[0].value() == 1);
    CHECK(e.params()[2].value() == 3);
}

TEST_CASE("spectrum examples") {
    CHECK(values_of(spectrum(E({1, 1}), 4)) == std::vector<Rational>{1, 1, 2, 2});
    CHECK(values_of(spectrum(E({1, 2}), 6)) == std::vector<Rational>{1, 2, 2, 3, 4, 4});
    CHECK(values_of(spectrum(cylinder(1), 3)) == std::vector<Rational>{1, 2, 3});
    // tie order: ascending j then m
    auto s = spectrum(E({1, 2}), 3);
    CHECK(s[1].source_index == 1);
    CHECK(s[1].multiplier == 2);
    CHECK(s[2].source_index == 2);
    CHECK(s[2].multiplier == 1);
}

TEST_CASE("capacity examples") {
    CHECK(capacity(E({1, 1}), 1) == 1);
    CHECK(capacity(E({1, 2}), 3) == 2);
    CHECK(capacity(cylinder(1), 5) == 5);
    CHECK_THROWS_AS(capacity(E({1, 2}), 0), std::domain_error);
}

TEST_CASE("cylinder capacities are k*b") {
    for (std::int64_t k = 1; k <= 30; ++k) {
        CHECK(capacity(cylinder(Rational(3, 2)), k) == Rational(3 * k, 2));
    }
}

TEST_CASE("is_rational and common_period") {
    CHECK(E({1, 2}).is_rational());
    CHECK(E({Rational(2, 3), Rational(5, 7)}).is_rational());
    CHECK_FALSE(cylinder(1).is_rational());
    CHECK(E({1, 1}).common_period() == 1);
    CHECK(E({1, 2}).common_period() == 2);
    CHECK(E({2, 3}).common_period() == 6);
    CHECK_THROWS_AS(cylinder(1).common_period(), std::domain_error);
}

TEST_CASE("k_m examples") {
    CHECK(k_m(E({1, 1}), 1) == 1);
    CHECK(k_m(E({1, 2}), 1) == 2);
    CHECK(k_m(E({1, 2}), 3) == 8);
    CHECK_THROWS_AS(k_m(cylinder(1), 1), std::domain_error);
}

TEST_CASE("k_set examples") {
    CHECK(k_set(E({1, 1}), 3) == std::vector<std::int64_t>{1, 3, 5});
    CHECK(k_set(E({1, 2}), 3) == std::vector<std::int64_t>{2, 5, 8});
    CHECK(k_set(E({2, 3}), 2) == std::vector<std::int64_t>{4, 9});
}

TEST_CASE("k_set is strictly increasing and matches the index formula") {
    // First appearance of m*tau sits after all smaller entries:
    // k_m = m*tau*sum(1/a_j) - n + 1 for all-finite E.
    test::RatGen gen(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> params;
        std::int64_t n = gen.integer(1, 4);
        for (std::int64_t i = 0; i < n; ++i) params.push_back(gen.positive(6, 4));
        Ellipsoid e = E(params);
        Rational tau = e.common_period();
        auto ks = k_set(e, 4);
        for (std::size_t m = 1; m <= ks.size(); ++m) {
            Rational inv_sum = 0;
            for (const auto& p : e.params()) inv_sum += 1 / p.value();
            Rational predicted = Rational(m) * tau * inv_sum - Rational(n) + 1;
            CHECK(Rational(ks[m - 1]) == predicted);
            if (m > 1) CHECK(ks[m - 1] > ks[m - 2]);
        }
    }
}

TEST_CASE("capacity equals the enumeration oracle") {
    test::RatGen gen(19);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> params;
        std::int64_t n = gen.integer(1, 4);
        for (std::int64_t i = 0; i < n; ++i) params.push_back(gen.positive(9, 5));
        Ellipsoid e = E(params);
        auto oracle = test::oracle_spectrum_values(e, 25);
        CHECK(values_of(spectrum(e, 25)) == oracle);
        CHECK(capacities(e, 25) == oracle);
    }
}

TEST_CASE("spectrum with infinite entries uses only finite parameters") {
    Ellipsoid e({ExtRational(Rational(2)), ExtRational::infinity(), ExtRational(Rational(3))});
    CHECK(values_of(spectrum(e, 5)) == std::vector<Rational>{2, 3, 4, 6, 6});
}

TEST_CASE("capacity is nondecreasing in k") {
    test::RatGen gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> params{gen.positive(8, 5), gen.positive(8, 5)};
        auto cs = capacities(E(params), 60);
        for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i - 1] <= cs[i]);
    }
}

TEST_CASE("conformality: scaling parameters by c^2 scales capacities by c^2") {
    test::RatGen gen(29);
    for (int trial = 0; trial < 15; ++trial) {
        Rational a = gen.positive(8, 5), b = gen.positive(8, 5);
        Rational c = gen.positive(5, 3);
        Rational c2 = c * c;
        for (std::int64_t k : {1, 2, 7, 19}) {
            CHECK(capacity(E({a * c2, b * c2}), k) == c2 * capacity(E({a, b}), k));
        }
    }
}

TEST_CASE("capacity is permutation invariant") {
    std::vector<Rational> params{Rational(5, 2), Rational(1, 3), Rational(4)};
    std::vector<Rational> shuffled{Rational(4), Rational(5, 2), Rational(1, 3)};
    CHECK(capacities(E(params), 30) == capacities(E(shuffled), 30));
}

TEST_CASE("every capacity is an integer multiple of a parameter") {
    test::RatGen gen(31);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Rational> params{gen.positive(9, 6), gen.positive(9, 6)};
        Ellipsoid e = E(params);
        for (const auto& entry : spectrum(e, 40)) {
            CHECK(entry.value == entry.multiplier * e.params()[entry.source_index - 1].value());
            Rational q = entry.value / e.params()[entry.source_index - 1].value();
            CHECK(den(q) == 1);
        }
    }
}

TEST_CASE("jump structure at the common period") {
    // c_{k_m} = c_{k_m + n - 1} = m*tau, and c_{k_m - 1} < m*tau when k_m > 1.
    test::RatGen gen(37);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> params;
        std::int64_t n = gen.integer(2, 4);
        for (std::int64_t i = 0; i < n; ++i) params.push_back(gen.positive(6, 4));
        Ellipsoid e = E(params);
        Rational tau = e.common_period();
        for (std::int64_t m = 1; m <= 3; ++m) {
            std::int64_t km = k_m(e, m);
            auto cs = capacities(e, km + n - 1);
            CHECK(cs[km - 1] == m * tau);
            CHECK(cs[km + n - 2] == m * tau);
            if (km > 1) CHECK(cs[km - 2] < m * tau);
        }
    }
}
