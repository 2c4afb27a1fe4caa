#pragma once

/// Executable forms of the capacity-ratio optimization results:
///  - the global maximizer of c_k^/vol^{1/n} over 2n-dimensional ellipsoids
///    (closed form plus an exhaustive grid verifier for n = 2),
///  - a sampled local-maximality check over rational ellipsoids,
///  - the concave-toric reduction via supporting-line ellipsoids,
///  - the convex-toric analysis over the two-corner family Omega(alpha, s, t)
///    with its closed-form areas, supports, thresholds, and exact sweep.

#include "capax/ratio.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace capax {

// ---------------------------------------------------------------------------
// Ellipsoid maximizers

struct EllipsoidMax {
    Ellipsoid ellipsoid;
    RatioValue ratio;
};

/// Closed-form global maximizer of the k-th capacity ratio over
/// 2n-dimensional ellipsoids, n >= 2. Writing k = qn + r with r in {1..n}:
/// the ratio's n-th power is (q+1)^{n-r+1} (q+2)^{r-1}, attained at the
/// integer ellipsoid with r-1 parameters q+1 and the rest q+2 (all q+1 when
/// r = 1); for n = 2 this is E(ceil(k/2), ceil((k+1)/2)).
EllipsoidMax global_ellipsoid_max(int n, std::int64_t k);

struct GridSearchResult {
    Rational max_nth_power;
    std::vector<Rational> argmax;  // a1/a2 values attaining the max
    bool matches_closed_form = false;
};

/// Exhaustive sweep of E(p/q, 1) over all 0 < p/q <= 1 with q <= denom_bound.
GridSearchResult global_ellipsoid_search(std::int64_t k, std::int64_t denom_bound, int jobs = 1);

/// True iff the grid maximum equals the closed form and is attained exactly
/// at the predicted parameter ratio. Only n = 2 is supported (the search
/// space is 1-dimensional after scaling).
bool verify_global_ellipsoid_max(int n, std::int64_t k, std::int64_t denom_bound);

enum class Verdict { ConfirmedMax, WitnessFound };

struct PerturbationWitness {
    Ellipsoid ellipsoid;
    RatioValue ratio;
    Rational eps;
    std::vector<std::int64_t> direction;
};

struct MaximizerReport {
    Ellipsoid candidate;
    RatioValue ratio;
    Verdict verdict;
    std::optional<PerturbationWitness> witness;
};

std::vector<Rational> default_eps();
/// {+-e_j} followed by {+-(e_j - e_h), j < h}.
std::vector<std::vector<std::int64_t>> default_directions(std::size_t n);

/// Samples the ratio at params + eps*d over the grid; ConfirmedMax when no
/// perturbation strictly increases the n-th power (a sampled necessary
/// condition, not a proof), else WitnessFound with the first witness in
/// (eps order, then direction order). Perturbations leaving the positive
/// cone are skipped.
MaximizerReport verify_local_ellipsoid_max(const Ellipsoid& e, std::int64_t k,
                                           const std::vector<Rational>& eps_list,
                                           const std::vector<std::vector<std::int64_t>>& directions);
MaximizerReport verify_local_ellipsoid_max(const Ellipsoid& e, std::int64_t k);

// ---------------------------------------------------------------------------
// Concave toric domains

struct TangentEllipsoid {
    Ellipsoid ellipsoid;
    ToricProfile profile;  // its triangle profile, contained in the input's region
    LatticeVector v;       // vector attaining the concave capacity formula
    Point touch;           // graph vertex attaining [v]_Omega
};

/// The supporting-line ellipsoid through the optimal vertex: its profile
/// lies inside Omega while its k-th capacity is at least c_k(X_Omega), so
/// its ratio dominates the profile's.
TangentEllipsoid concave_tangent_ellipsoid(const ToricProfile& p, std::int64_t k);

/// True iff every profile's squared ratio is bounded by
/// ceil(k/2)*ceil((k+1)/2) and its tangent ellipsoid dominates it. All
/// profiles must be concave.
bool verify_concave_max(std::int64_t k, const std::vector<ToricProfile>& profiles);

/// Deterministic generator of valid concave profiles (vertex coordinates
/// with denominator <= denom_bound) for the verification harness.
std::vector<ToricProfile> random_concave_profiles(std::size_t count, std::size_t max_vertices,
                                                  std::int64_t denom_bound, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Convex toric domains: the two-corner family

/// Omega(alpha, s, t) = {0<=y<=1+s} n {0<=x<=1+t} n {1-alpha(x-1)<=y} with
/// alpha = (i+r)/(k-(i+r)) parametrized over 0 < i+r < k; corners
/// v+ = (1-s/alpha, 1+s) and v- = (1+t, 1-alpha*t). The rectangle case
/// i = k, r = 0 is handled by the polydisk closed form, not by this type.
class TwoCornerFamily {
public:
    TwoCornerFamily(std::int64_t k, std::int64_t i, Rational r, Rational s, Rational t);

    /// t chosen so both corner supports agree: t = r/(1-r) * s/alpha.
    static TwoCornerFamily balanced(std::int64_t k, std::int64_t i, Rational r, Rational s);

    std::int64_t k() const { return k_; }
    std::int64_t i() const { return i_; }
    const Rational& r() const { return r_; }
    const Rational& s() const { return s_; }
    const Rational& t() const { return t_; }
    Rational alpha() const;
    bool balanced_supports() const;

    Point corner_plus() const;
    Point corner_minus() const;

private:
    std::int64_t k_, i_;
    Rational r_, s_, t_;
};

/// Convex profile [(0,1+s), v+, v-, (1+t,0)] with duplicates dropped.
ToricProfile two_corner_profile(const TwoCornerFamily& f);

/// area(Omega) = 1 + t + s - s^2/(2 alpha) - t^2 alpha / 2.
Rational two_corner_area(const TwoCornerFamily& f);

/// (|v_i|, |v_{i+1}|) = (k(1 + sr/(i+r)), k(1 + t(1-r)/(k-(i+r)))).
std::pair<Rational, Rational> two_corner_supports(const TwoCornerFamily& f);

struct TwoCornerRatio {
    bool balanced;         // whether the two corner supports agree
    Rational closed_form;  // 2 c_k^2 / vol via the closed formulas
    Rational via_profile;  // same through two_corner_profile + ratio_toric
};

/// Both routes to 2 * (squared ratio); they agree for every admissible
/// (s, t), balanced or not.
TwoCornerRatio two_corner_ratio_identity(const TwoCornerFamily& f);

struct Thresholds {
    Rational u0;     // (2k^2-3k)/(2k^2-2k-1)
    Rational l0;     // k/(2k-1)
    Rational u_km1;  // (k-1)/(2k-1)
    Rational l_km1;  // (k-1)/(2k^2-2k-1)
};

/// The four r-thresholds of the sufficient conditions, k >= 2.
Thresholds thresholds(std::int64_t k);

/// Exact union of the sufficient-condition r-intervals for each i in
/// 0..k-1. For k >= 3 the union is all of [0,1); for k = 2 it misses
/// exactly r = 1/3 at i = 1 and r = 2/3 at i = 0.
struct CoverGap {
    std::int64_t i;
    Rational r;
};
struct CoverReport {
    bool covered;                // no gaps at all
    std::vector<CoverGap> gaps;  // single uncovered points otherwise
};
CoverReport sufficient_condition_cover(std::int64_t k);

struct GridSpec {
    std::int64_t r_denom_bound = 11;  // r runs over p/q, q <= bound, in [0,1)
    std::int64_t s_steps = 40;        // s = j/s_steps * s_max, j = 0..s_steps
    std::int64_t t_steps = 10;        // unbalanced mode only
    bool balanced = true;
    std::int64_t rectangle_s_cap = 4;  // s range for the i = k rectangle leg
};

struct EqualityLocus {
    std::int64_t i;
    Rational r, s, t;
};

struct ConvexSweepReport {
    std::int64_t k = 0;
    bool holds = false;           // 2 c_k^2/vol <= k^2 everywhere, loci as expected
    bool bound_ok = false;        // the inequality part alone
    bool identity_ok = false;     // closed form == profile route at every point
    bool equality_at_s0 = false;  // the square P(1,1) locus was hit
    std::vector<EqualityLocus> extra_loci;  // equality points with s != 0
    bool thresholds_ok = false;   // l <= u with equality iff k = 2
    bool cover_ok = false;        // interval cover as described above
    std::int64_t points_checked = 0;
};

/// Sweeps the family over the grid (t forced by the balance condition unless
/// grid.balanced is false) and checks 2 c_k^2/vol <= k^2 exactly, with
/// equality only at s = 0 plus, for k = 2, the two E(2,1)-equivalent
/// configurations. The i = k rectangle leg goes through the polydisk closed
/// form.
ConvexSweepReport verify_convex_toric_max(std::int64_t k, const GridSpec& grid = {}, int jobs = 1);

// ---------------------------------------------------------------------------

/// Minimal kappa >= 2 such that the unit polydisk beats the best ellipsoid,
/// k^n/n! >= (q+1)^{n-r+1}(q+2)^{r-1}, for every k >= kappa. n >= 2.
std::int64_t kappa(int n);

}  // namespace capax
