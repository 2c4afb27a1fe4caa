#include "capax/toric.hpp"

#include <utility>

namespace capax {

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(LatticeVector v, const Point& p) { return v.v1 * p.x + v.v2 * p.y; }

}  // namespace

ToricProfile::ToricProfile(ProfileKind kind, std::vector<Point> vertices)
    : kind_(kind), vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw std::domain_error("ToricProfile: needs at least 2 vertices");
    if (vertices_.front().x != 0 || vertices_.front().y <= 0)
        throw std::domain_error("ToricProfile: first vertex must be (0, y0) with y0 > 0");
    if (vertices_.back().y != 0 || vertices_.back().x <= 0)
        throw std::domain_error("ToricProfile: last vertex must be (x0, 0) with x0 > 0");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[i + 1];
        if (b.x < a.x || b.y > a.y || (b.x == a.x && b.y == a.y))
            throw std::domain_error("ToricProfile: vertices must advance right and down");
    }

    // Drop interior vertices on a straight segment.
    std::vector<Point> reduced;
    reduced.push_back(vertices_.front());
    for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
        if (cross(reduced.back(), vertices_[i], vertices_[i + 1]) != 0)
            reduced.push_back(vertices_[i]);
    }
    reduced.push_back(vertices_.back());
    vertices_ = std::move(reduced);

    for (std::size_t i = 0; i + 2 < vertices_.size(); ++i) {
        Rational turn = cross(vertices_[i], vertices_[i + 1], vertices_[i + 2]);
        if (kind_ == ProfileKind::Concave && turn <= 0)
            throw std::domain_error("ToricProfile: concave profile needs convex f (slopes increasing)");
        if (kind_ == ProfileKind::Convex && turn >= 0)
            throw std::domain_error("ToricProfile: convex profile needs concave f (slopes decreasing)");
    }
    if (kind_ == ProfileKind::Concave) {
        // A convex decreasing f admits no flat or vertical segments.
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
            if (vertices_[i + 1].x == vertices_[i].x || vertices_[i + 1].y == vertices_[i].y)
                throw std::domain_error("ToricProfile: concave profile cannot have axis-parallel segments");
    }
}

bool ToricProfile::contains(const Point& p) const {
    if (p.x < 0 || p.y < 0 || p.x > x_max()) return false;
    // y <= f(p.x); the vertical last segment of a convex profile means the
    // upper boundary at x0 is the vertex above (x0, 0).
    Rational best = -1;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[i + 1];
        if (p.x < a.x || p.x > b.x) continue;
        if (a.x == b.x) {
            if (a.y > best) best = a.y;
        } else {
            Rational y = a.y + (p.x - a.x) * (b.y - a.y) / (b.x - a.x);
            if (y > best) best = y;
        }
    }
    return p.y <= best;
}

SupportValue support_max_full(const ToricProfile& p, LatticeVector v) {
    if (v.v1 < 0 || v.v2 < 0 || (v.v1 == 0 && v.v2 == 0))
        throw std::domain_error("support_max: lattice vector must be nonzero nonnegative");
    SupportValue out;
    const auto& vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Rational val = dot(v, vs[i]);
        if (out.attained.empty() || val > out.value) {
            out.value = val;
            out.attained.assign(1, i);
        } else if (val == out.value) {
            out.attained.push_back(i);
        }
    }
    return out;
}

Rational support_max(const ToricProfile& p, LatticeVector v) {
    return support_max_full(p, v).value;
}

SupportValue support_min_on_graph_full(const ToricProfile& p, LatticeVector v) {
    if (v.v1 < 0 || v.v2 < 0 || (v.v1 == 0 && v.v2 == 0))
        throw std::domain_error("support_min_on_graph: lattice vector must be nonzero nonnegative");
    SupportValue out;
    const auto& vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Rational val = dot(v, vs[i]);
        if (out.attained.empty() || val < out.value) {
            out.value = val;
            out.attained.assign(1, i);
        } else if (val == out.value) {
            out.attained.push_back(i);
        }
    }
    return out;
}

Rational support_min_on_graph(const ToricProfile& p, LatticeVector v) {
    return support_min_on_graph_full(p, v).value;
}

Rational volume(const ToricProfile& p) {
    // Shoelace over (0,0), (x0,0), ..., (0,y0); twice the area is the plain
    // cross-product sum. Terms involving the origin vanish.
    const auto& vs = p.vertices();
    Rational twice_area = 0;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Point& a = vs[i + 1];  // ring runs along the reversed profile
        const Point& b = vs[i];
        twice_area += a.x * b.y - b.x * a.y;
    }
    return twice_area;
}

CapacityValue capacity_concave_full(const ToricProfile& p, std::int64_t k) {
    if (p.kind() != ProfileKind::Concave)
        throw std::domain_error("capacity_concave: profile is not concave");
    if (k < 1) throw std::domain_error("capacity_concave: k must be >= 1");
    CapacityValue out;
    for (std::int64_t v1 = 1; v1 <= k; ++v1) {
        LatticeVector v{v1, k + 1 - v1};
        Rational val = support_min_on_graph(p, v);
        if (out.attained.empty() || val > out.value) {
            out.value = val;
            out.attained.assign(1, v);
        } else if (val == out.value) {
            out.attained.push_back(v);
        }
    }
    return out;
}

Rational capacity_concave(const ToricProfile& p, std::int64_t k) {
    return capacity_concave_full(p, k).value;
}

CapacityValue capacity_convex_full(const ToricProfile& p, std::int64_t k) {
    if (p.kind() != ProfileKind::Convex)
        throw std::domain_error("capacity_convex: profile is not convex");
    if (k < 1) throw std::domain_error("capacity_convex: k must be >= 1");
    CapacityValue out;
    for (std::int64_t j = 0; j <= k; ++j) {
        LatticeVector v{j, k - j};
        Rational val = support_max(p, v);
        if (out.attained.empty() || val < out.value) {
            out.value = val;
            out.attained.assign(1, v);
        } else if (val == out.value) {
            out.attained.push_back(v);
        }
    }
    return out;
}

Rational capacity_convex(const ToricProfile& p, std::int64_t k) {
    return capacity_convex_full(p, k).value;
}

Rational capacity_toric(const ToricProfile& p, std::int64_t k) {
    return p.kind() == ProfileKind::Concave ? capacity_concave(p, k) : capacity_convex(p, k);
}

namespace {

// Per-vertex tables of i * coordinate, so the batch scans below touch each
// candidate with lookups and comparisons only. A zero coordinate (the axis
// endpoints, rectangle corners) drops its half of the dot product.
struct VertexMultiples {
    std::vector<Rational> x_mult, y_mult;  // empty when the coordinate is 0
};

std::vector<VertexMultiples> multiples_tables(const ToricProfile& p, std::int64_t top) {
    std::vector<VertexMultiples> tables(p.vertices().size());
    for (std::size_t w = 0; w < p.vertices().size(); ++w) {
        const Point& v = p.vertices()[w];
        if (v.x != 0) {
            tables[w].x_mult.reserve(static_cast<std::size_t>(top) + 1);
            for (std::int64_t i = 0; i <= top; ++i) tables[w].x_mult.push_back(v.x * i);
        }
        if (v.y != 0) {
            tables[w].y_mult.reserve(static_cast<std::size_t>(top) + 1);
            for (std::int64_t i = 0; i <= top; ++i) tables[w].y_mult.push_back(v.y * i);
        }
    }
    return tables;
}

Rational table_dot(const VertexMultiples& t, std::int64_t v1, std::int64_t v2) {
    if (t.x_mult.empty()) return t.y_mult[static_cast<std::size_t>(v2)];
    if (t.y_mult.empty()) return t.x_mult[static_cast<std::size_t>(v1)];
    return t.x_mult[static_cast<std::size_t>(v1)] + t.y_mult[static_cast<std::size_t>(v2)];
}

}  // namespace

std::vector<Rational> capacities_concave(const ToricProfile& p, std::int64_t k_max) {
    if (p.kind() != ProfileKind::Concave)
        throw std::domain_error("capacities_concave: profile is not concave");
    if (k_max < 1) throw std::domain_error("capacities_concave: k_max must be >= 1");
    auto tables = multiples_tables(p, k_max + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (std::int64_t k = 1; k <= k_max; ++k) {
        Rational best;
        for (std::int64_t v1 = 1; v1 <= k; ++v1) {
            Rational lo = table_dot(tables[0], v1, k + 1 - v1);
            for (std::size_t w = 1; w < tables.size(); ++w) {
                Rational val = table_dot(tables[w], v1, k + 1 - v1);
                if (val < lo) lo = std::move(val);
            }
            if (v1 == 1 || lo > best) best = std::move(lo);
        }
        out.push_back(std::move(best));
    }
    return out;
}

std::vector<Rational> capacities_convex(const ToricProfile& p, std::int64_t k_max) {
    if (p.kind() != ProfileKind::Convex)
        throw std::domain_error("capacities_convex: profile is not convex");
    if (k_max < 1) throw std::domain_error("capacities_convex: k_max must be >= 1");
    auto tables = multiples_tables(p, k_max);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (std::int64_t k = 1; k <= k_max; ++k) {
        Rational best;
        for (std::int64_t j = 0; j <= k; ++j) {
            Rational hi = table_dot(tables[0], j, k - j);
            for (std::size_t w = 1; w < tables.size(); ++w) {
                Rational val = table_dot(tables[w], j, k - j);
                if (val > hi) hi = std::move(val);
            }
            if (j == 0 || hi < best) best = std::move(hi);
        }
        out.push_back(std::move(best));
    }
    return out;
}

ToricProfile ellipsoid_profile(const Rational& a1, const Rational& a2, ProfileKind kind) {
    if (a1 <= 0 || a2 <= 0) throw std::domain_error("ellipsoid_profile: parameters must be positive");
    return ToricProfile(kind, {Point{0, a2}, Point{a1, 0}});
}

ToricProfile polydisk_profile(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw std::domain_error("polydisk_profile: parameters must be positive");
    return ToricProfile(ProfileKind::Convex, {Point{0, b}, Point{a, b}, Point{a, 0}});
}

ToricProfile scale(const ToricProfile& p, const Rational& c) {
    if (c <= 0) throw std::domain_error("scale: factor must be positive");
    std::vector<Point> vs = p.vertices();
    for (Point& v : vs) {
        v.x *= c;
        v.y *= c;
    }
    return ToricProfile(p.kind(), std::move(vs));
}

}  // namespace capax
