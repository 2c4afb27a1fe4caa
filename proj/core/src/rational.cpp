#include "capax/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace capax {

std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    Integer d = den(r);
    if (d != 1) {
        s += '/';
        s += d.str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::domain_error("invalid rational: bad integer part");
    Integer v{std::string(s)};
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer p = parse_integer(text.substr(0, slash));
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part)) throw std::domain_error("invalid rational: bad denominator");
    Integer q{std::string(den_part)};
    if (q == 0) throw std::domain_error("invalid rational: zero denominator");
    return Rational(p, q);
}

std::string to_string(const ExtRational& e) {
    return e.is_finite() ? to_string(e.value()) : std::string("inf");
}

ExtRational parse_ext_rational(std::string_view text) {
    if (text == "inf") return ExtRational::infinity();
    return ExtRational(parse_rational(text));
}

Rational rational_lcm(const std::vector<Rational>& values) {
    if (values.empty()) throw std::domain_error("rational_lcm: empty list");
    Integer n_lcm = 0, d_gcd = 0;
    for (const Rational& v : values) {
        if (v <= 0) throw std::domain_error("rational_lcm: nonpositive entry");
        n_lcm = n_lcm == 0 ? num(v) : lcm(n_lcm, num(v));
        d_gcd = gcd(d_gcd, den(v));
    }
    return Rational(n_lcm, d_gcd);
}

std::pair<std::int64_t, std::int64_t> ceil_div_two(std::int64_t k) {
    if (k < 1) throw std::domain_error("ceil_div_two: k must be >= 1");
    return {(k + 1) / 2, (k + 2) / 2};
}

}  // namespace capax
