#include "capax/optimize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

namespace capax {

namespace {

void parallel_chunks(std::size_t count, int jobs,
                     const std::function<void(std::size_t, std::size_t)>& run_range) {
    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    if (workers <= 1 || count == 0) {
        run_range(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run_range, lo, hi);
    }
    for (std::thread& t : pool) t.join();
}

Rational int_pow(const Rational& base, int exp) {
    Rational v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ellipsoid maximizers

EllipsoidMax global_ellipsoid_max(int n, std::int64_t k) {
    if (n < 2) throw std::domain_error("global_ellipsoid_max: n must be >= 2");
    if (k < 1) throw std::domain_error("global_ellipsoid_max: k must be >= 1");
    std::int64_t q = (k - 1) / n;
    std::int64_t r = k - q * n;  // in {1..n}
    std::vector<Rational> params;
    params.reserve(static_cast<std::size_t>(n));
    if (r == 1) {
        params.assign(static_cast<std::size_t>(n), Rational(q + 1));
    } else {
        for (std::int64_t i = 1; i <= n; ++i)
            params.push_back(Rational(i <= r - 1 ? q + 1 : q + 2));
    }
    Rational power = int_pow(Rational(q + 1), static_cast<int>(n - r + 1)) *
                     int_pow(Rational(q + 2), static_cast<int>(r - 1));
    return EllipsoidMax{Ellipsoid::finite(std::move(params)), make_ratio(power, n)};
}

GridSearchResult global_ellipsoid_search(std::int64_t k, std::int64_t denom_bound, int jobs) {
    if (k < 1) throw std::domain_error("global_ellipsoid_search: k must be >= 1");
    if (denom_bound < 2) throw std::domain_error("global_ellipsoid_search: denom_bound must be >= 2");

    std::vector<Rational> grid;
    for (std::int64_t q = 1; q <= denom_bound; ++q)
        for (std::int64_t p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1) grid.emplace_back(p, q);

    std::vector<Rational> values(grid.size());
    parallel_chunks(grid.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            Ellipsoid e = Ellipsoid::finite({grid[idx], Rational(1)});
            values[idx] = ratio_ellipsoid(e, k).nth_power;
        }
    });

    GridSearchResult out;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        if (out.argmax.empty() || values[idx] > out.max_nth_power) {
            out.max_nth_power = values[idx];
            out.argmax.assign(1, grid[idx]);
        } else if (values[idx] == out.max_nth_power) {
            out.argmax.push_back(grid[idx]);
        }
    }
    std::sort(out.argmax.begin(), out.argmax.end());

    EllipsoidMax closed = global_ellipsoid_max(2, k);
    auto [h1, h2] = ceil_div_two(k);
    out.matches_closed_form = out.max_nth_power == closed.ratio.nth_power &&
                              out.argmax.size() == 1 && out.argmax.front() == Rational(h1, h2);
    return out;
}

bool verify_global_ellipsoid_max(int n, std::int64_t k, std::int64_t denom_bound) {
    if (n != 2)
        throw std::domain_error("verify_global_ellipsoid_max: only n = 2 is supported");
    return global_ellipsoid_search(k, denom_bound).matches_closed_form;
}

std::vector<Rational> default_eps() { return {Rational(1, 10), Rational(1, 100)}; }

std::vector<std::vector<std::int64_t>> default_directions(std::size_t n) {
    std::vector<std::vector<std::int64_t>> dirs;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::int64_t> d(n, 0);
        d[j] = 1;
        dirs.push_back(d);
        d[j] = -1;
        dirs.push_back(std::move(d));
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = j + 1; h < n; ++h) {
            std::vector<std::int64_t> d(n, 0);
            d[j] = 1;
            d[h] = -1;
            dirs.push_back(d);
            d[j] = -1;
            d[h] = 1;
            dirs.push_back(std::move(d));
        }
    return dirs;
}

MaximizerReport verify_local_ellipsoid_max(const Ellipsoid& e, std::int64_t k,
                                           const std::vector<Rational>& eps_list,
                                           const std::vector<std::vector<std::int64_t>>& directions) {
    if (!e.is_rational())
        throw std::domain_error("verify_local_ellipsoid_max: ellipsoid must be rational");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (eps_list[i] <= 0) throw std::domain_error("verify_local_ellipsoid_max: eps must be positive");
        if (i > 0 && eps_list[i] >= eps_list[i - 1])
            throw std::domain_error("verify_local_ellipsoid_max: eps_list must be decreasing");
    }
    const std::size_t n = e.dim_half();
    for (const auto& d : directions) {
        if (d.size() != n) throw std::domain_error("verify_local_ellipsoid_max: direction dimension mismatch");
        if (std::all_of(d.begin(), d.end(), [](std::int64_t c) { return c == 0; }))
            throw std::domain_error("verify_local_ellipsoid_max: zero direction");
    }

    RatioValue base = ratio_ellipsoid(e, k);
    for (const Rational& eps : eps_list) {
        for (const auto& d : directions) {
            std::vector<Rational> perturbed;
            perturbed.reserve(n);
            bool valid = true;
            for (std::size_t j = 0; j < n; ++j) {
                Rational b = e.params()[j].value() + eps * d[j];
                if (b <= 0) {
                    valid = false;
                    break;
                }
                perturbed.push_back(std::move(b));
            }
            if (!valid) continue;
            Ellipsoid candidate = Ellipsoid::finite(std::move(perturbed));
            RatioValue ratio = ratio_ellipsoid(candidate, k);
            if (ratio.nth_power > base.nth_power) {
                return MaximizerReport{e, base, Verdict::WitnessFound,
                                       PerturbationWitness{std::move(candidate), std::move(ratio), eps, d}};
            }
        }
    }
    return MaximizerReport{e, base, Verdict::ConfirmedMax, std::nullopt};
}

MaximizerReport verify_local_ellipsoid_max(const Ellipsoid& e, std::int64_t k) {
    return verify_local_ellipsoid_max(e, k, default_eps(), default_directions(e.dim_half()));
}

// ---------------------------------------------------------------------------
// Concave toric domains

TangentEllipsoid concave_tangent_ellipsoid(const ToricProfile& p, std::int64_t k) {
    CapacityValue cap = capacity_concave_full(p, k);
    LatticeVector v = cap.attained.front();
    SupportValue sup = support_min_on_graph_full(p, v);
    Point w = p.vertices()[sup.attained.front()];
    // The supporting line <v, .> = <v, w> lies under the graph; it meets the
    // axes at (c/v1, 0) and (0, c/v2), the profile of E(c/v1, c/v2).
    Rational a1 = cap.value / v.v1;
    Rational a2 = cap.value / v.v2;
    ToricProfile triangle = ellipsoid_profile(a1, a2, ProfileKind::Concave);
    return TangentEllipsoid{Ellipsoid::finite({a1, a2}), std::move(triangle), v, std::move(w)};
}

bool verify_concave_max(std::int64_t k, const std::vector<ToricProfile>& profiles) {
    auto [h1, h2] = ceil_div_two(k);
    Rational bound(h1 * h2);
    for (const ToricProfile& p : profiles) {
        if (p.kind() != ProfileKind::Concave)
            throw std::domain_error("verify_concave_max: profile is not concave");
        RatioValue rt = ratio_toric(p, k);
        if (rt.nth_power > bound) return false;
        TangentEllipsoid tangent = concave_tangent_ellipsoid(p, k);
        RatioValue re = ratio_ellipsoid(tangent.ellipsoid, k);
        if (re.nth_power < rt.nth_power) return false;
        if (re.nth_power > bound) return false;
    }
    return true;
}

std::vector<ToricProfile> random_concave_profiles(std::size_t count, std::size_t max_vertices,
                                                  std::int64_t denom_bound, std::uint64_t seed) {
    if (max_vertices < 2) throw std::domain_error("random_concave_profiles: need max_vertices >= 2");
    if (denom_bound < 1) throw std::domain_error("random_concave_profiles: need denom_bound >= 1");
    std::mt19937_64 rng(seed);
    auto rand_int = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    // A rational in (0, hi), denominator <= denom_bound; hi itself excluded.
    // Empty when no such rational exists (hi <= 1/denom_bound).
    auto rand_rat_below = [&](const Rational& hi) -> std::optional<Rational> {
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::int64_t q = rand_int(1, denom_bound);
            Integer top = num(hi * q) / den(hi * q);  // floor(hi*q)
            if (top < 1) continue;
            std::int64_t p = rand_int(1, top.convert_to<std::int64_t>());
            Rational v(p, q);
            if (v > 0 && v < hi) return v;
        }
        return std::nullopt;
    };

    std::vector<ToricProfile> out;
    out.reserve(count);
    while (out.size() < count) {
        Rational x0(rand_int(1, 6 * denom_bound), rand_int(1, denom_bound));
        Rational y0(rand_int(1, 6 * denom_bound), rand_int(1, denom_bound));
        std::vector<Point> pts{Point{0, y0}, Point{x0, 0}};
        std::size_t interior = static_cast<std::size_t>(rand_int(0, static_cast<std::int64_t>(max_vertices - 2)));
        for (std::size_t c = 0; c < interior; ++c) {
            auto x = rand_rat_below(x0);
            auto y = rand_rat_below(y0);
            if (x && y) pts.push_back(Point{*x, *y});
        }

        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

        // Lower convex hull from (0, y0) to (x0, 0).
        std::vector<Point> hull;
        for (const Point& pt : pts) {
            while (hull.size() >= 2) {
                const Point& o = hull[hull.size() - 2];
                const Point& a = hull[hull.size() - 1];
                Rational turn = (a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * (pt.x - o.x);
                if (turn <= 0)
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(pt);
        }
        out.emplace_back(ProfileKind::Concave, std::move(hull));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Convex toric domains: the two-corner family

TwoCornerFamily::TwoCornerFamily(std::int64_t k, std::int64_t i, Rational r, Rational s, Rational t)
    : k_(k), i_(i), r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {
    if (k_ < 1) throw std::domain_error("TwoCornerFamily: k must be >= 1");
    if (i_ < 0 || i_ > k_ - 1) throw std::domain_error("TwoCornerFamily: i must be in 0..k-1");
    if (r_ < 0 || r_ >= 1) throw std::domain_error("TwoCornerFamily: r must be in [0,1)");
    if (i_ + r_ <= 0) throw std::domain_error("TwoCornerFamily: i + r must be positive");
    Rational a = alpha();
    if (s_ < 0 || s_ > a) throw std::domain_error("TwoCornerFamily: s must be in [0, alpha]");
    if (t_ < 0 || t_ * a > 1) throw std::domain_error("TwoCornerFamily: t must be in [0, 1/alpha]");
}

TwoCornerFamily TwoCornerFamily::balanced(std::int64_t k, std::int64_t i, Rational r, Rational s) {
    Rational ir = i + r;
    if (k < 1 || i < 0 || i > k - 1 || r < 0 || r >= 1 || ir <= 0)
        throw std::domain_error("TwoCornerFamily: invalid (k, i, r)");
    Rational alpha = ir / (k - ir);
    Rational t = r / (1 - r) * s / alpha;
    return TwoCornerFamily(k, i, std::move(r), std::move(s), std::move(t));
}

Rational TwoCornerFamily::alpha() const {
    Rational ir = i_ + r_;
    return ir / (k_ - ir);
}

bool TwoCornerFamily::balanced_supports() const {
    return s_ * r_ / (i_ + r_) == t_ * (1 - r_) / (k_ - (i_ + r_));
}

Point TwoCornerFamily::corner_plus() const { return Point{1 - s_ / alpha(), 1 + s_}; }

Point TwoCornerFamily::corner_minus() const { return Point{1 + t_, 1 - alpha() * t_}; }

ToricProfile two_corner_profile(const TwoCornerFamily& f) {
    std::vector<Point> vs{Point{0, 1 + f.s()}, f.corner_plus(), f.corner_minus(),
                          Point{1 + f.t(), 0}};
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return ToricProfile(ProfileKind::Convex, std::move(vs));
}

Rational two_corner_area(const TwoCornerFamily& f) {
    Rational a = f.alpha();
    return 1 + f.t() + f.s() - f.s() * f.s() / (2 * a) - f.t() * f.t() * a / 2;
}

std::pair<Rational, Rational> two_corner_supports(const TwoCornerFamily& f) {
    Rational ir = f.i() + f.r();
    Rational plus = f.k() * (1 + f.s() * f.r() / ir);
    Rational minus = f.k() * (1 + f.t() * (1 - f.r()) / (f.k() - ir));
    return {std::move(plus), std::move(minus)};
}

TwoCornerRatio two_corner_ratio_identity(const TwoCornerFamily& f) {
    auto [sup_i, sup_i1] = two_corner_supports(f);
    const Rational& c = sup_i < sup_i1 ? sup_i : sup_i1;  // c_k(X_Omega)
    TwoCornerRatio out;
    out.balanced = f.balanced_supports();
    out.closed_form = c * c / two_corner_area(f);
    out.via_profile = 2 * ratio_toric(two_corner_profile(f), f.k()).nth_power;
    return out;
}

Thresholds thresholds(std::int64_t k) {
    if (k < 2) throw std::domain_error("thresholds: k must be >= 2");
    Rational big_den(2 * k * k - 2 * k - 1);
    return Thresholds{
        Rational(2 * k * k - 3 * k) / big_den,  // u0
        Rational(k, 2 * k - 1),                 // l0
        Rational(k - 1, 2 * k - 1),             // u_{k-1}
        Rational(k - 1) / big_den,              // l_{k-1}
    };
}

namespace {

struct RInterval {
    Rational lo, hi;
    bool lo_closed, hi_closed;
};

// Gaps of the union of `ivals` inside [0, 1); assumes hi <= 1 for all.
std::vector<RInterval> union_gaps(std::vector<RInterval> ivals) {
    std::sort(ivals.begin(), ivals.end(), [](const RInterval& a, const RInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<RInterval> gaps;
    Rational cur = 0;
    bool cur_covered = false;  // whether point `cur` itself is already covered
    for (const RInterval& iv : ivals) {
        if (iv.lo > cur || (iv.lo == cur && !iv.lo_closed && !cur_covered)) {
            gaps.push_back(RInterval{cur, iv.lo, !cur_covered, !iv.lo_closed});
        }
        if (iv.hi > cur || (iv.hi == cur && iv.hi_closed && !cur_covered)) {
            cur = iv.hi;
            cur_covered = iv.hi_closed;
        }
    }
    if (cur < 1) gaps.push_back(RInterval{cur, 1, !cur_covered, false});
    // Drop empty gap records such as (a, a).
    std::vector<RInterval> out;
    for (RInterval& g : gaps)
        if (g.lo < g.hi || (g.lo == g.hi && g.lo_closed && g.hi_closed)) out.push_back(std::move(g));
    return out;
}

}  // namespace

CoverReport sufficient_condition_cover(std::int64_t k) {
    Thresholds th = thresholds(k);
    CoverReport report{true, {}};
    Rational half(1, 2);
    for (std::int64_t i = 0; i < k; ++i) {
        std::vector<RInterval> ivals;
        if (i <= k - 2) ivals.push_back(RInterval{0, half, true, true});
        if (i >= 1) ivals.push_back(RInterval{half, 1, true, false});
        if (i == k - 1) {
            ivals.push_back(RInterval{0, th.u_km1, true, false});
            ivals.push_back(RInterval{th.l_km1, 1, false, false});
        }
        if (i == 0) {
            ivals.push_back(RInterval{0, th.u0, true, false});
            ivals.push_back(RInterval{th.l0, 1, false, false});
        }
        for (const RInterval& gap : union_gaps(std::move(ivals))) {
            report.covered = false;
            if (gap.lo == gap.hi) {
                report.gaps.push_back(CoverGap{i, gap.lo});
            } else {
                // A positive-length gap; record both endpoints so it is visible.
                report.gaps.push_back(CoverGap{i, gap.lo});
                report.gaps.push_back(CoverGap{i, gap.hi});
            }
        }
    }
    return report;
}

namespace {

struct SweepCell {
    std::int64_t i;    // k means the rectangle leg
    Rational r;
};

struct CellResult {
    bool bound_ok = true;
    bool identity_ok = true;
    bool s0_hit = false;
    std::vector<EqualityLocus> extra;
    std::int64_t points = 0;
};

void sweep_two_corner_cell(std::int64_t k, const GridSpec& grid, const SweepCell& cell,
                           CellResult& out) {
    Rational ksq(k * k);
    Rational ir = cell.i + cell.r;
    Rational alpha = ir / (k - ir);
    Rational s_hi = alpha;
    if (cell.r > 0) {
        Rational by_t = (1 - cell.r) / cell.r;
        if (by_t < s_hi) s_hi = by_t;
    }
    auto check = [&](const TwoCornerFamily& f) {
        ++out.points;
        TwoCornerRatio tr = two_corner_ratio_identity(f);
        if (tr.closed_form != tr.via_profile) out.identity_ok = false;
        if (tr.closed_form > ksq) out.bound_ok = false;
        if (tr.closed_form == ksq) {
            if (f.s() == 0 && f.t() == 0)
                out.s0_hit = true;
            else
                out.extra.push_back(EqualityLocus{f.i(), f.r(), f.s(), f.t()});
        }
    };
    for (std::int64_t j = 0; j <= grid.s_steps; ++j) {
        Rational s = s_hi * j / grid.s_steps;
        if (grid.balanced) {
            check(TwoCornerFamily::balanced(k, cell.i, cell.r, s));
        } else {
            Rational t_hi = 1 / alpha;
            for (std::int64_t jt = 0; jt <= grid.t_steps; ++jt)
                check(TwoCornerFamily(k, cell.i, cell.r, s, t_hi * jt / grid.t_steps));
        }
    }
}

void sweep_rectangle_cell(std::int64_t k, const GridSpec& grid, CellResult& out) {
    Rational ksq(k * k);
    for (std::int64_t j = 0; j <= grid.s_steps; ++j) {
        Rational s = Rational(grid.rectangle_s_cap) * j / grid.s_steps;
        ++out.points;
        Rational closed = 2 * ratio_polydisk_closed_form(1, 1 + s, k).nth_power;
        Rational via = 2 * ratio_toric(polydisk_profile(1, 1 + s), k).nth_power;
        if (closed != via) out.identity_ok = false;
        if (closed > ksq) out.bound_ok = false;
        if (closed == ksq) {
            if (s == 0)
                out.s0_hit = true;
            else
                out.extra.push_back(EqualityLocus{k, 0, s, 0});
        }
    }
}

}  // namespace

ConvexSweepReport verify_convex_toric_max(std::int64_t k, const GridSpec& grid, int jobs) {
    if (k < 2) throw std::domain_error("verify_convex_toric_max: k must be >= 2");
    if (grid.r_denom_bound < 1 || grid.s_steps < 1 || grid.t_steps < 1 || grid.rectangle_s_cap < 1)
        throw std::domain_error("verify_convex_toric_max: invalid grid spec");

    std::vector<Rational> r_values;
    for (std::int64_t q = 1; q <= grid.r_denom_bound; ++q)
        for (std::int64_t p = 0; p < q; ++p)
            if (p == 0 ? q == 1 : std::gcd(p, q) == 1) r_values.emplace_back(p, q);
    std::sort(r_values.begin(), r_values.end());

    std::vector<SweepCell> cells;
    for (std::int64_t i = 0; i < k; ++i)
        for (const Rational& r : r_values)
            if (i + r > 0) cells.push_back(SweepCell{i, r});
    cells.push_back(SweepCell{k, 0});  // rectangle leg

    std::vector<CellResult> results(cells.size());
    parallel_chunks(cells.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            if (cells[idx].i == k)
                sweep_rectangle_cell(k, grid, results[idx]);
            else
                sweep_two_corner_cell(k, grid, cells[idx], results[idx]);
        }
    });

    ConvexSweepReport report;
    report.k = k;
    report.bound_ok = true;
    report.identity_ok = true;
    for (const CellResult& res : results) {
        report.bound_ok = report.bound_ok && res.bound_ok;
        report.identity_ok = report.identity_ok && res.identity_ok;
        report.equality_at_s0 = report.equality_at_s0 || res.s0_hit;
        report.extra_loci.insert(report.extra_loci.end(), res.extra.begin(), res.extra.end());
        report.points_checked += res.points;
    }

    Thresholds th = thresholds(k);
    report.thresholds_ok = k == 2 ? (th.l_km1 == th.u_km1 && th.l0 == th.u0)
                                  : (th.l_km1 < th.u_km1 && th.l0 < th.u0);

    CoverReport cover = sufficient_condition_cover(k);
    if (k == 2) {
        report.cover_ok = cover.gaps.size() == 2 && cover.gaps[0].i == 0 &&
                          cover.gaps[0].r == Rational(2, 3) && cover.gaps[1].i == 1 &&
                          cover.gaps[1].r == Rational(1, 3);
    } else {
        report.cover_ok = cover.covered;
    }

    // Every equality locus with s != 0 must be one of the two k = 2
    // configurations equivalent to E(2,1).
    bool loci_ok = true;
    for (const EqualityLocus& loc : report.extra_loci) {
        bool allowed = k == 2 && ((loc.i == 1 && loc.r == Rational(1, 3) && loc.s == 2 &&
                                   loc.t == Rational(1, 2)) ||
                                  (loc.i == 0 && loc.r == Rational(2, 3) &&
                                   loc.s == Rational(1, 2) && loc.t == 2));
        if (!allowed) loci_ok = false;
    }
    std::sort(report.extra_loci.begin(), report.extra_loci.end(),
              [](const EqualityLocus& a, const EqualityLocus& b) {
                  if (a.i != b.i) return a.i < b.i;
                  if (a.r != b.r) return a.r < b.r;
                  return a.s < b.s;
              });

    report.holds = report.bound_ok && report.identity_ok && report.equality_at_s0 && loci_ok &&
                   report.thresholds_ok && report.cover_ok;
    return report;
}

// ---------------------------------------------------------------------------

std::int64_t kappa(int n) {
    if (n < 2) throw std::domain_error("kappa: n must be >= 2");
    Integer factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;

    auto polydisk_beats_ellipsoid = [&](std::int64_t k) {
        Integer lhs = pow(Integer(k), static_cast<unsigned>(n));
        std::int64_t q = (k - 1) / n;
        std::int64_t r = k - q * static_cast<std::int64_t>(n);
        Integer rhs = factorial * pow(Integer(q + 1), static_cast<unsigned>(n - r + 1)) *
                      pow(Integer(q + 2), static_cast<unsigned>(r - 1));
        return lhs >= rhs;
    };
    // Once k^n n^n >= n! (k+2n-1)^n, every k' >= k satisfies the bound:
    // the ellipsoid power is at most ((k-1)/n + 2)^n.
    auto settled = [&](std::int64_t k) {
        Integer lhs = pow(Integer(k), static_cast<unsigned>(n)) * pow(Integer(n), static_cast<unsigned>(n));
        Integer rhs = factorial * pow(Integer(k + 2 * n - 1), static_cast<unsigned>(n));
        return lhs >= rhs;
    };

    std::int64_t last_bad = 1;
    for (std::int64_t k = 2;; ++k) {
        if (!polydisk_beats_ellipsoid(k)) last_bad = k;
        if (settled(k)) break;
    }
    return std::max<std::int64_t>(2, last_bad + 1);
}

}  // namespace capax
