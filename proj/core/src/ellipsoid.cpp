#include "capax/ellipsoid.hpp"

#include <algorithm>
#include <queue>

namespace capax {

Ellipsoid::Ellipsoid(std::vector<ExtRational> params) : params_(std::move(params)) {
    if (params_.empty()) throw std::domain_error("Ellipsoid: needs at least one parameter");
    bool any_finite = false;
    for (const ExtRational& p : params_) {
        if (p.is_finite()) {
            if (p.value() <= 0) throw std::domain_error("Ellipsoid: parameters must be positive");
            any_finite = true;
        }
    }
    if (!any_finite) throw std::domain_error("Ellipsoid: at least one parameter must be finite");
    std::sort(params_.begin(), params_.end());
}

Ellipsoid Ellipsoid::finite(std::vector<Rational> params) {
    std::vector<ExtRational> ext;
    ext.reserve(params.size());
    for (Rational& p : params) ext.emplace_back(std::move(p));
    return Ellipsoid(std::move(ext));
}

bool Ellipsoid::is_rational() const {
    for (const ExtRational& p : params_)
        if (!p.is_finite()) return false;
    return true;
}

Rational Ellipsoid::common_period() const {
    std::vector<Rational> finite;
    finite.reserve(params_.size());
    for (const ExtRational& p : params_) {
        if (!p.is_finite())
            throw std::domain_error("common_period: no common period (infinite parameter)");
        finite.push_back(p.value());
    }
    return rational_lcm(finite);
}

Rational Ellipsoid::volume() const {
    Rational v = 1;
    for (const ExtRational& p : params_) {
        if (!p.is_finite()) throw std::domain_error("volume: infinite parameter");
        v *= p.value();
    }
    return v;
}

namespace {

// Lazy n-way merge over the streams {m*a_j : m >= 1} of the finite a_j.
// Pop order is (value, j, m) lexicographic, which realizes the tie rule.
class SpectrumMerger {
public:
    explicit SpectrumMerger(const Ellipsoid& e) {
        const auto& ps = e.params();
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (ps[j].is_finite())
                heap_.push(Node{ps[j].value(), ps[j].value(), static_cast<std::int64_t>(j) + 1, 1});
    }

    SpectrumEntry next() {
        Node top = heap_.top();
        heap_.pop();
        heap_.push(Node{top.value + top.step, top.step, top.j, top.m + 1});
        return SpectrumEntry{top.value, top.j, top.m};
    }

private:
    struct Node {
        Rational value;
        Rational step;  // a_j
        std::int64_t j;
        std::int64_t m;
    };
    struct Later {
        bool operator()(const Node& a, const Node& b) const {
            int c = a.value.compare(b.value);
            if (c != 0) return c > 0;
            if (a.j != b.j) return a.j > b.j;
            return a.m > b.m;
        }
    };
    std::priority_queue<Node, std::vector<Node>, Later> heap_;
};

}  // namespace

std::vector<SpectrumEntry> spectrum(const Ellipsoid& e, std::int64_t count) {
    if (count < 1) throw std::domain_error("spectrum: count must be >= 1");
    SpectrumMerger merger(e);
    std::vector<SpectrumEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back(merger.next());
    return out;
}

Rational capacity(const Ellipsoid& e, std::int64_t k) {
    if (k < 1) throw std::domain_error("capacity: k must be >= 1");
    SpectrumMerger merger(e);
    SpectrumEntry entry;
    for (std::int64_t i = 0; i < k; ++i) entry = merger.next();
    return entry.value;
}

std::vector<Rational> capacities(const Ellipsoid& e, std::int64_t k_max) {
    if (k_max < 1) throw std::domain_error("capacities: k_max must be >= 1");
    SpectrumMerger merger(e);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (std::int64_t i = 0; i < k_max; ++i) out.push_back(merger.next().value);
    return out;
}

std::int64_t k_m(const Ellipsoid& e, std::int64_t m) {
    if (m < 1) throw std::domain_error("k_m: m must be >= 1");
    Rational target = e.common_period() * m;  // throws on non-rational E
    SpectrumMerger merger(e);
    for (std::int64_t k = 1;; ++k) {
        Rational v = merger.next().value;
        if (v == target) return k;
        // m*tau is a multiple of every parameter, so it always appears.
    }
}

std::vector<std::int64_t> k_set(const Ellipsoid& e, std::int64_t max_m) {
    if (max_m < 1) throw std::domain_error("k_set: max_m must be >= 1");
    Rational tau = e.common_period();
    SpectrumMerger merger(e);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(max_m));
    Rational target = tau;
    for (std::int64_t k = 1; static_cast<std::int64_t>(out.size()) < max_m; ++k) {
        if (merger.next().value == target) {
            out.push_back(k);
            target += tau;
        }
    }
    return out;
}

}  // namespace capax
