#pragma once

/// 4-dimensional toric domains X_Omega given by piecewise-linear profiles.
///
/// A profile is the graph of a nonincreasing f: [0, x0] -> [0, y0] with
/// f(0) = y0 > 0 and f(x0) = 0, stored as its vertex list from (0, y0) to
/// (x0, 0). A Concave profile bounds a concave toric domain (f convex), a
/// Convex profile a convex one (f concave; a horizontal first segment and a
/// vertical last segment are the only axis-parallel segments possible).
/// The region Omega always includes (0,0) and the two axis segments.
///
/// Capacities:
///   concave:  c_k = max { [v]_Omega : v in {1..k}^2, v1+v2 = k+1 }
///   convex:   c_k = min { |v_j|_Omega : v_j = (j, k-j), j = 0..k }
/// with [v] the min of <v,.> over the graph and |v| the max over Omega.

#include "capax/rational.hpp"

#include <cstdint>
#include <vector>

namespace capax {

enum class ProfileKind { Concave, Convex };

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct LatticeVector {
    std::int64_t v1 = 0;
    std::int64_t v2 = 0;
    friend bool operator==(LatticeVector a, LatticeVector b) {
        return a.v1 == b.v1 && a.v2 == b.v2;
    }
};

class ToricProfile {
public:
    /// Validates the vertex list and normalizes away collinear interior
    /// vertices (canonical representation, so equality tests are meaningful).
    /// Throws std::domain_error on violation of the profile invariants.
    ToricProfile(ProfileKind kind, std::vector<Point> vertices);

    ProfileKind kind() const { return kind_; }
    const std::vector<Point>& vertices() const { return vertices_; }

    const Rational& x_max() const { return vertices_.back().x; }
    const Rational& y_max() const { return vertices_.front().y; }

    /// Membership in the closed region Omega.
    bool contains(const Point& p) const;

    friend bool operator==(const ToricProfile& a, const ToricProfile& b) {
        return a.kind_ == b.kind_ && a.vertices_ == b.vertices_;
    }

private:
    ProfileKind kind_;
    std::vector<Point> vertices_;
};

/// A support value together with every vertex index attaining it.
struct SupportValue {
    Rational value;
    std::vector<std::size_t> attained;
};

/// |v|_Omega = max over Omega of <v, w>; attained at profile vertices.
Rational support_max(const ToricProfile& p, LatticeVector v);
SupportValue support_max_full(const ToricProfile& p, LatticeVector v);

/// [v]_Omega = min over graph(f) of <v, w>; attained at profile vertices.
Rational support_min_on_graph(const ToricProfile& p, LatticeVector v);
SupportValue support_min_on_graph_full(const ToricProfile& p, LatticeVector v);

/// vol(X_Omega) = 2 * area(Omega).
Rational volume(const ToricProfile& p);

/// A capacity value together with every lattice vector attaining it.
struct CapacityValue {
    Rational value;
    std::vector<LatticeVector> attained;
};

/// Requires p.kind() == Concave, k >= 1.
Rational capacity_concave(const ToricProfile& p, std::int64_t k);
CapacityValue capacity_concave_full(const ToricProfile& p, std::int64_t k);

/// Requires p.kind() == Convex, k >= 1.
Rational capacity_convex(const ToricProfile& p, std::int64_t k);
CapacityValue capacity_convex_full(const ToricProfile& p, std::int64_t k);

/// c_k by the formula matching p.kind().
Rational capacity_toric(const ToricProfile& p, std::int64_t k);

/// [c_1, ..., c_k_max] in one pass over precomputed vertex multiples;
/// identical to calling the per-k functions.
std::vector<Rational> capacities_concave(const ToricProfile& p, std::int64_t k_max);
std::vector<Rational> capacities_convex(const ToricProfile& p, std::int64_t k_max);

/// Triangle profile (0,a2)-(a1,0) of the ellipsoid E(a1,a2); valid under
/// either kind (ellipsoids are the toric domains that are both).
ToricProfile ellipsoid_profile(const Rational& a1, const Rational& a2, ProfileKind kind);

/// Rectangle profile [0,a] x [0,b] of the polydisk P(a,b), kind Convex.
ToricProfile polydisk_profile(const Rational& a, const Rational& b);

/// Profile with every coordinate multiplied by c > 0.
ToricProfile scale(const ToricProfile& p, const Rational& c);

}  // namespace capax
