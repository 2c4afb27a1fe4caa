#pragma once

/// Ellipsoids E(a_1,...,a_n) and their capacity spectrum.
///
/// The k-th capacity of an ellipsoid is the k-th element of the nondecreasing
/// merged sequence of all positive multiples m*a_j of the finite parameters,
/// each (j, m) pair contributing one entry. For rational ellipsoids (all
/// parameters finite) the common period tau(E) is the rational lcm of the
/// parameters, k_m(E) is the first index at which m*tau(E) appears in the
/// spectrum, and K(E) = { k_m(E) | m >= 1 }.

#include "capax/rational.hpp"

#include <cstdint>
#include <vector>

namespace capax {

/// One element of the sorted multiple sequence: value = multiplier * a_j,
/// where j = source_index is 1-based into the (ascending) parameter list.
struct SpectrumEntry {
    Rational value;
    std::int64_t source_index = 0;
    std::int64_t multiplier = 0;
};

class Ellipsoid {
public:
    /// Parameters are sorted ascending on construction (capacities are
    /// permutation invariant). Requires n >= 1, every entry > 0, and at
    /// least one finite entry; throws std::domain_error otherwise.
    explicit Ellipsoid(std::vector<ExtRational> params);

    /// Convenience for all-finite tuples.
    static Ellipsoid finite(std::vector<Rational> params);

    const std::vector<ExtRational>& params() const { return params_; }
    std::size_t dim_half() const { return params_.size(); }

    /// True iff all parameters are finite. (All finite-rational tuples have
    /// rational ratios; an infinite entry leaves no common period.)
    bool is_rational() const;

    /// tau(E): the rational lcm of the parameters. Requires is_rational().
    Rational common_period() const;

    /// Product of the parameters. Requires is_rational().
    Rational volume() const;

    friend bool operator==(const Ellipsoid& a, const Ellipsoid& b) {
        return a.params_ == b.params_;
    }

private:
    std::vector<ExtRational> params_;
};

/// First `count` entries of the spectrum. Ties between distinct (j, m) at
/// equal value are ordered by ascending j then m.
std::vector<SpectrumEntry> spectrum(const Ellipsoid& e, std::int64_t count);

/// c_k(E) = spectrum(E, k)[k-1].value, k >= 1.
Rational capacity(const Ellipsoid& e, std::int64_t k);

/// [c_1, ..., c_k_max] in one merge pass.
std::vector<Rational> capacities(const Ellipsoid& e, std::int64_t k_max);

/// Minimal k >= 1 with c_k(E) = m * tau(E). Requires is_rational(), m >= 1.
std::int64_t k_m(const Ellipsoid& e, std::int64_t m);

/// [k_1(E), ..., k_max_m(E)], strictly increasing.
std::vector<std::int64_t> k_set(const Ellipsoid& e, std::int64_t max_m);

}  // namespace capax
