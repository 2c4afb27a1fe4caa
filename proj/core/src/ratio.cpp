#include "capax/ratio.hpp"

#include <cmath>

namespace capax {

RatioValue make_ratio(Rational nth_power, int dim_half) {
    if (nth_power <= 0) throw std::domain_error("RatioValue: nth_power must be positive");
    if (dim_half < 1) throw std::domain_error("RatioValue: n must be >= 1");
    double approx = std::pow(to_double(nth_power), 1.0 / dim_half);
    return RatioValue{std::move(nth_power), dim_half, approx};
}

RatioValue ratio_ellipsoid(const Ellipsoid& e, std::int64_t k) {
    if (!e.is_rational())
        throw std::domain_error("ratio_ellipsoid: infinite volume (infinite parameter)");
    int n = static_cast<int>(e.dim_half());
    Rational c = capacity(e, k);
    Rational power = 1;
    for (int i = 0; i < n; ++i) power *= c;
    return make_ratio(power / e.volume(), n);
}

RatioValue ratio_toric(const ToricProfile& p, std::int64_t k) {
    Rational c = capacity_toric(p, k);
    return make_ratio(c * c / volume(p), 2);
}

RatioValue ratio_polydisk_closed_form(const Rational& a, const Rational& b, std::int64_t k) {
    if (a <= 0 || b <= 0)
        throw std::domain_error("ratio_polydisk_closed_form: parameters must be positive");
    if (k < 1) throw std::domain_error("ratio_polydisk_closed_form: k must be >= 1");
    const Rational& m = a < b ? a : b;
    return make_ratio(Rational(k * k) * m * m / (2 * a * b), 2);
}

Ordering crossover_check(std::int64_t k) {
    if (k < 1) throw std::domain_error("crossover_check: k must be >= 1");
    auto [h1, h2] = ceil_div_two(k);
    Rational polydisk(k * k, 2);
    Rational ellipsoid(h1 * h2);
    int c = polydisk.compare(ellipsoid);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

}  // namespace capax
