#pragma once

/// Exact scalar arithmetic for the capacity calculators.
///
/// Every quantity in the library (ellipsoid parameters, profile coordinates,
/// capacities, areas, ratios raised to their n-th power) is an exact
/// arbitrary-precision rational. Floating point appears only at display time.
/// ExtRational adds the single value +inf, used for cylinder-like ellipsoid
/// factors E(b, inf, ..., inf); it never enters a toric profile.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace capax {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p" with an optional sign on p. Throws std::domain_error
/// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// A rational extended with +inf. Total order: every finite value < +inf.
class ExtRational {
public:
    ExtRational() : value_(0), finite_(true) {}
    ExtRational(Rational value) : value_(std::move(value)), finite_(true) {}
    ExtRational(int value) : value_(value), finite_(true) {}

    static ExtRational infinity() {
        ExtRational e;
        e.finite_ = false;
        return e;
    }

    bool is_finite() const { return finite_; }

    const Rational& value() const {
        if (!finite_) throw std::domain_error("ExtRational: value() on +inf");
        return value_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

private:
    Rational value_;
    bool finite_;
};

/// "p/q", "p", or "inf".
std::string to_string(const ExtRational& e);

/// Like parse_rational, additionally accepting "inf".
ExtRational parse_ext_rational(std::string_view text);

/// The least common multiple of positive rationals: the smallest t > 0 such
/// that t / v is a positive integer for every input v. With v_j = n_j/d_j in
/// lowest terms, t = lcm(n_1..n_k) / gcd(d_1..d_k).
/// Throws std::domain_error on an empty list or a nonpositive entry.
Rational rational_lcm(const std::vector<Rational>& values);

/// (ceil(k/2), ceil((k+1)/2)) for k >= 1; throws std::domain_error otherwise.
std::pair<std::int64_t, std::int64_t> ceil_div_two(std::int64_t k);

}  // namespace capax
