#pragma once

/// Capacity ratios c_k / vol^{1/n}, held exactly through their n-th power.
/// All comparisons go through nth_power; the float is display only.

#include "capax/ellipsoid.hpp"
#include "capax/toric.hpp"

#include <cstdint>

namespace capax {

struct RatioValue {
    Rational nth_power;  // c_k^n / vol, exact
    int dim_half = 0;    // n
    double approx = 0;   // nth_power^{1/n}
};

RatioValue make_ratio(Rational nth_power, int dim_half);

/// c_k(E)^n / (a_1 ... a_n). All parameters must be finite.
RatioValue ratio_ellipsoid(const Ellipsoid& e, std::int64_t k);

/// c_k(X_Omega)^2 / vol(X_Omega), n = 2.
RatioValue ratio_toric(const ToricProfile& p, std::int64_t k);

/// k^2 min(a,b)^2 / (2ab); identical to ratio_toric on the rectangle profile.
RatioValue ratio_polydisk_closed_form(const Rational& a, const Rational& b, std::int64_t k);

enum class Ordering { Less, Equal, Greater };

/// Orders the squared ratio of P(1,1) against the best 4-dimensional
/// ellipsoid at index k: compares k^2/2 with ceil(k/2)*ceil((k+1)/2).
Ordering crossover_check(std::int64_t k);

}  // namespace capax
