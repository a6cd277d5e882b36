#include "hopspan/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>

#include "hopspan/exact.hpp"
#include "hopspan/random.hpp"
#include "hopspan/spanner.hpp"
#include "hopspan/triangulate.hpp"

namespace hopspan {

using exact::Expansion;

namespace {

struct CellRange {
    long c0, c1, r0, r1;
};

CellRange candidate_range(double cx, double cy, double r, const GridConfig& g) {
    auto lo = [&](double v, double o) {
        return static_cast<long>(std::floor((v - r - o) / GridConfig::side)) - 1;
    };
    auto hi = [&](double v, double o) {
        return static_cast<long>(std::floor((v + r - o) / GridConfig::side)) + 1;
    };
    return {lo(cx, g.offset_x), hi(cx, g.offset_x), lo(cy, g.offset_y), hi(cy, g.offset_y)};
}

bool strictly_inside(const Point2& p, const Box& b) {
    return b.x0 < p.x && p.x < b.x1 && b.y0 < p.y && p.y < b.y1;
}

// Squared distance from c to [x0, x1] along one axis.
Expansion axis_gap_squared(double c, double x0, double x1) {
    if (c < x0) {
        const Expansion d = Expansion::diff(x0, c);
        return d * d;
    }
    if (c > x1) {
        const Expansion d = Expansion::diff(c, x1);
        return d * d;
    }
    return Expansion();
}

// min over t in [x0, x1] of (t - p)(t - q).
Expansion axis_min_product(double p, double q, double x0, double x1) {
    const Expansion twice_mid = Expansion::sum(p, q);
    if (exact::compare(twice_mid, Expansion(2.0 * x0)) < 0) {
        return Expansion::diff(x0, p) * Expansion::diff(x0, q);
    }
    if (exact::compare(twice_mid, Expansion(2.0 * x1)) > 0) {
        return Expansion::diff(x1, p) * Expansion::diff(x1, q);
    }
    const Expansion d = Expansion::diff(p, q);
    return (d * d).scaled(-0.25);
}

}  // namespace

CellSet cells_intersected_by_disk(const Disk& d, const GridConfig& grid) {
    CellSet out;
    const CellRange range = candidate_range(d.center.x, d.center.y, d.radius, grid);
    const Expansion r2 = Expansion::product(d.radius, d.radius);
    for (long row = range.r0; row <= range.r1; ++row) {
        for (long col = range.c0; col <= range.c1; ++col) {
            const CellIndex c{static_cast<int>(col), static_cast<int>(row)};
            const Box b = grid.cell_box(c);
            bool hit;
            if (d.radius == 0.0) {
                hit = strictly_inside(d.center, b);
            } else {
                const Expansion gap = axis_gap_squared(d.center.x, b.x0, b.x1) +
                                      axis_gap_squared(d.center.y, b.y0, b.y1);
                // Equality means tangency at a single boundary point.
                hit = exact::compare(gap, r2) < 0;
            }
            if (hit) out.cells.insert(c);
        }
    }
    return out;
}

CellSet cells_intersected_by_diametral_disk(const Point2& p, const Point2& q,
                                            const GridConfig& grid) {
    CellSet out;
    const double cx = 0.5 * (p.x + q.x), cy = 0.5 * (p.y + q.y);
    const CellRange range = candidate_range(cx, cy, 0.5 * distance(p, q), grid);
    for (long row = range.r0; row <= range.r1; ++row) {
        for (long col = range.c0; col <= range.c1; ++col) {
            const CellIndex c{static_cast<int>(col), static_cast<int>(row)};
            const Box b = grid.cell_box(c);
            bool hit;
            if (p == q) {
                hit = strictly_inside(p, b);
            } else {
                const Expansion m = axis_min_product(p.x, q.x, b.x0, b.x1) +
                                    axis_min_product(p.y, q.y, b.y0, b.y1);
                hit = m.sign() < 0;
            }
            if (hit) out.cells.insert(c);
        }
    }
    return out;
}

namespace {

// ---------------------------------------------------------------- sampling

class CellSampler {
public:
    CellSampler(const GridConfig& g, Rng& rng) : g_(g), rng_(rng) {}

    Point2 point_in(CellIndex c, bool adversarial) {
        const Box b = g_.cell_box(c);
        for (;;) {
            const Point2 p{coord(b.x0, b.x1, adversarial), coord(b.y0, b.y1, adversarial)};
            if (strictly_inside(p, b)) return p;
        }
    }

    /// q in cell `to` with |pq|^2 <= bound2; nullopt if sampling gave up.
    std::optional<Point2> partner(const Point2& p, CellIndex to, double bound2, bool adversarial) {
        const Box b = g_.cell_box(to);
        const Point2 nearest{std::clamp(p.x, b.x0, b.x1), std::clamp(p.y, b.y0, b.y1)};
        if (compare_squared_distance(p, nearest, bound2) >= 0) return std::nullopt;
        for (int attempt = 0; attempt < 20000; ++attempt) {
            Point2 q = point_in(to, adversarial);
            const double d = distance(p, q);
            if (adversarial && (d * d > bound2 || rng_.coin(0.5))) {
                // Slide q along pq to just inside the distance bound.
                const double f = std::sqrt(bound2) / d * (1.0 - std::pow(10.0, -rng_.uniform(1.0, 12.0)));
                const Point2 moved{p.x + (q.x - p.x) * f, p.y + (q.y - p.y) * f};
                if (strictly_inside(moved, b) && compare_squared_distance(p, moved, bound2) <= 0) {
                    return moved;
                }
            }
            if (compare_squared_distance(p, q, bound2) <= 0) return q;
        }
        return std::nullopt;
    }

private:
    double coord(double lo, double hi, bool adversarial) {
        if (adversarial && rng_.coin(0.7)) {
            const double t = (hi - lo) * std::pow(10.0, -rng_.uniform(0.3, 9.0));
            return rng_.coin(0.5) ? lo + t : hi - t;
        }
        return lo + (hi - lo) * rng_.uniform01();
    }

    const GridConfig& g_;
    Rng& rng_;
};

GridConfig random_grid(Rng& rng) {
    GridConfig g;
    g.offset_x = rng.uniform(0.0, GridConfig::side);
    g.offset_y = rng.uniform(0.0, GridConfig::side);
    return g;
}

std::vector<CellOffset> offsets_of(std::initializer_list<NeighborKind> kinds) {
    std::vector<CellOffset> out;
    for (CellOffset o : neighborhood_offsets()) {
        if (std::find(kinds.begin(), kinds.end(), classify_offset(o)) != kinds.end()) {
            out.push_back(o);
        }
    }
    return out;
}

std::set<CellIndex> plus_closure(CellIndex c) {
    return {c, c + CellOffset{1, 0}, c + CellOffset{-1, 0}, c + CellOffset{0, 1},
            c + CellOffset{0, -1}};
}

std::set<CellIndex> eight_closure(CellIndex c) {
    std::set<CellIndex> out;
    for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) out.insert(c + CellOffset{dc, dr});
    return out;
}

std::size_t count_outside(const CellSet& s, const std::set<CellIndex>& allowed) {
    return static_cast<std::size_t>(std::count_if(
        s.cells.begin(), s.cells.end(), [&](CellIndex c) { return allowed.count(c) == 0; }));
}

/// Runs `trials` uniform trials followed by `trials` adversarial ones. Each
/// trial returns the observed value, or nullopt when sampling gave up.
CheckResult run_statement(const std::string& name, double bound, std::size_t trials,
                          std::uint64_t seed,
                          const std::function<std::optional<double>(Rng&, bool)>& trial) {
    CheckResult r;
    r.name = name;
    r.bound = bound;
    Rng rng(seed);
    for (std::size_t i = 0; i < 2 * trials; ++i) {
        const bool adversarial = i >= trials;
        std::optional<double> v;
        for (int retry = 0; retry < 100 && !v; ++retry) v = trial(rng, adversarial);
        if (!v) continue;
        ++r.trials;
        r.worst = std::max(r.worst, *v);
        if (*v > bound) ++r.violations;
    }
    return r;
}

constexpr double kHalf = 0.5;  // (1/sqrt 2)^2

}  // namespace

std::vector<CheckResult> check_lemma4(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckResult> out;
    const auto all = neighborhood_offsets();
    out.push_back(run_statement(
        "pair.distinct_cells_at_most_7", 7, trials, Rng::derive(seed, 41),
        [&](Rng& rng, bool adv) -> std::optional<double> {
            const GridConfig g = random_grid(rng);
            CellSampler s(g, rng);
            const CellIndex a{0, 0};
            const CellIndex b = a + all[rng.below(all.size())];
            const Point2 p = s.point_in(a, adv);
            const auto q = s.partner(p, b, 1.0, adv);
            if (!q) return std::nullopt;
            return double(cells_intersected_by_diametral_disk(p, *q, g).size());
        }));
    out.push_back(run_statement(
        "pair.same_cell_at_most_5", 5, trials, Rng::derive(seed, 42),
        [&](Rng& rng, bool adv) -> std::optional<double> {
            const GridConfig g = random_grid(rng);
            CellSampler s(g, rng);
            const CellIndex a{0, 0};
            const Point2 p = s.point_in(a, adv);
            const Point2 q = s.point_in(a, adv);
            if (p == q) return std::nullopt;
            // A cell outside the +-closure counts as a violation on its own.
            const CellSet cells = cells_intersected_by_diametral_disk(p, q, g);
            if (count_outside(cells, plus_closure(a)) > 0) return 6.0;
            return double(cells.size());
        }));
    return out;
}

std::vector<CheckResult> check_lemma5(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckResult> out;
    const auto all = neighborhood_offsets();
    const auto close = offsets_of({NeighborKind::plus, NeighborKind::cross});

    auto statement = [&](const std::string& name, double bound, std::uint64_t k,
                         const std::vector<CellOffset>& offsets, double bound2, bool eight) {
        return run_statement(name, bound, trials, Rng::derive(seed, k),
                             [&, bound2, eight](Rng& rng, bool adv) -> std::optional<double> {
            const GridConfig g = random_grid(rng);
            CellSampler s(g, rng);
            const CellIndex a{0, 0};
            const CellIndex b = a + offsets[rng.below(offsets.size())];
            const Point2 p = s.point_in(a, adv);
            const auto q = s.partner(p, b, bound2, adv);
            if (!q) return std::nullopt;
            std::set<CellIndex> allowed;
            if (eight) {
                allowed = eight_closure(a);
                allowed.merge(eight_closure(b));
            } else {
                allowed = plus_closure(a);
                allowed.merge(plus_closure(b));
            }
            return double(count_outside(cells_intersected_by_diametral_disk(p, *q, g), allowed));
        });
    };
    out.push_back(statement("xset.within_neighborhoods", 0, 51, all, 1.0, true));
    out.push_back(statement("xset.at_most_2_outside_x", 2, 52, all, 1.0, false));
    out.push_back(statement("xset.none_outside_x_when_close", 0, 53, close, kHalf, false));
    return out;
}

std::vector<CheckResult> check_lemma6(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto statement = [&](const std::string& name, double bound, std::uint64_t k,
                         std::vector<CellOffset> offsets, double bound2) {
        return run_statement(name, bound, trials, Rng::derive(seed, k),
                             [offsets, bound2](Rng& rng, bool adv) -> std::optional<double> {
            const GridConfig g = random_grid(rng);
            CellSampler s(g, rng);
            const CellIndex cp{0, 0};  // holds p1, p2
            const CellIndex c = cp + offsets[rng.below(offsets.size())];
            const Point2 p1 = s.point_in(cp, adv);
            const Point2 p2 = s.point_in(cp, adv);
            const auto p3 = s.partner(p2, c, bound2, adv);
            if (!p3) return std::nullopt;
            const Point2 p4 = s.point_in(c, adv);
            CellSet u = cells_intersected_by_diametral_disk(p1, p2, g);
            u.cells.merge(cells_intersected_by_diametral_disk(p2, *p3, g).cells);
            u.cells.merge(cells_intersected_by_diametral_disk(*p3, p4, g).cells);
            return double(u.size());
        });
    };
    out.push_back(statement("chain.close_at_most_8", 8, 61,
                            offsets_of({NeighborKind::plus, NeighborKind::cross}), kHalf));
    out.push_back(statement("chain.plus_at_most_8", 8, 62, offsets_of({NeighborKind::plus}), 1.0));
    out.push_back(statement("chain.cross_at_most_10", 10, 63, offsets_of({NeighborKind::cross}), 1.0));
    out.push_back(statement("chain.far_at_most_11", 11, 64, offsets_of({NeighborKind::far}), 1.0));
    return out;
}

namespace {

Point2 in_triangle(Rng& rng, const Point2& a, const Point2& b, const Point2& c, bool near_vertex) {
    double u = rng.uniform01(), v = rng.uniform01();
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    if (near_vertex) {
        const double t = std::pow(10.0, -rng.uniform(0.0, 8.0));
        u *= t;
        v *= t;
    }
    // Barycentric around a randomly chosen vertex.
    const Point2* vs[3] = {&a, &b, &c};
    const std::size_t k = rng.below(3);
    const Point2& o = *vs[k];
    const Point2& e1 = *vs[(k + 1) % 3];
    const Point2& e2 = *vs[(k + 2) % 3];
    return {o.x + u * (e1.x - o.x) + v * (e2.x - o.x), o.y + u * (e1.y - o.y) + v * (e2.y - o.y)};
}

}  // namespace

CheckResult check_convex_reach(std::size_t trials, std::uint64_t seed) {
    CheckResult r;
    r.name = "convex.nearer_endpoint_reach";
    r.bound = 1.0;  // worst is the ratio to the bound
    Rng rng(Rng::derive(seed, 11));
    constexpr double kSlack = 1e-12;
    while (r.trials < trials) {
        const bool adv = r.trials >= trials / 2;
        Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Point2 b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Point2 c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if (adv && rng.coin(0.5)) {
            // Thin triangle: c close to segment ab.
            const double t = rng.uniform01();
            const double e = std::pow(10.0, -rng.uniform(1.0, 6.0));
            c = {a.x + t * (b.x - a.x) + e * (a.y - b.y), a.y + t * (b.y - a.y) + e * (b.x - a.x)};
        }
        if (orient_sign(a, b, c) == 0) continue;
        const double d = std::max({distance(a, b), distance(b, c), distance(c, a)});
        const Point2 s = in_triangle(rng, a, b, c, adv && rng.coin(0.5));
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double dx = std::cos(theta), dy = std::sin(theta);
        double t_minus = rng.uniform(0.0, 2.0), t_plus = rng.uniform(0.0, 2.0);
        if (adv && rng.coin(0.5)) {
            // Crossing point near one end of the segment.
            (rng.coin(0.5) ? t_minus : t_plus) *= std::pow(10.0, -rng.uniform(1.0, 8.0));
        }
        const Point2 p{s.x - t_minus * dx, s.y - t_minus * dy};
        const Point2 q{s.x + t_plus * dx, s.y + t_plus * dy};
        const Point2 x = in_triangle(rng, a, b, c, adv && rng.coin(0.7));
        const double reach = std::min(distance(x, p), distance(x, q));
        const double bound = convex_reach_bound(d, distance(p, q));
        ++r.trials;
        const double ratio = bound > 0 ? reach / bound : 0.0;
        r.worst = std::max(r.worst, ratio);
        if (reach > bound * (1.0 + kSlack)) ++r.violations;
    }
    return r;
}

namespace {

PointSet random_points(Rng& rng, std::size_t n, double w, double h, bool clustered) {
    std::vector<Point2> pts;
    const Point2 hub{rng.uniform(0, w), rng.uniform(0, h)};
    while (pts.size() < n) {
        Point2 p{rng.uniform(0, w), rng.uniform(0, h)};
        if (clustered && rng.coin(0.5)) {
            p = {hub.x + rng.uniform(-0.2, 0.2), hub.y + rng.uniform(-0.2, 0.2)};
        }
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

}  // namespace

std::vector<CheckResult> check_delaunay_paths(std::size_t trials, std::uint64_t seed) {
    CheckResult any{"delaunaypath.disk_through_pq", 0, 0, 0, 0};
    CheckResult dia{"delaunaypath.diametral_truncated", 0, 0, 0, 0};
    Rng rng(Rng::derive(seed, 21));
    for (std::size_t i = 0; i < trials; ++i) {
        const bool adv = i >= trials / 2;
        const std::size_t n = 3 + rng.below(38);
        const PointSet ps = random_points(rng, n, 3.0, 3.0, adv);
        const Triangulation dt = delaunay(ps);
        const int p = static_cast<int>(rng.below(n));
        int q = static_cast<int>(rng.below(n - 1));
        if (q >= p) ++q;
        const Point2 m{0.5 * (ps[p].x + ps[q].x), 0.5 * (ps[p].y + ps[q].y)};
        const Point2 perp{ps[p].y - ps[q].y, ps[q].x - ps[p].x};
        // Center on the bisector; large |t| approaches a half-plane.
        const double t = adv ? (rng.coin(0.5) ? 1.0 : -1.0) * std::pow(10.0, rng.uniform(-3.0, 3.0))
                             : rng.uniform(-3.0, 3.0);
        const Point2 c{m.x + t * perp.x, m.y + t * perp.y};
        double r = std::max(distance(c, ps[p]), distance(c, ps[q]));
        while (!disk_contains(Disk(c, r), ps[p]) || !disk_contains(Disk(c, r), ps[q])) {
            r = std::nextafter(r, INFINITY);
        }
        const Disk d(c, r);
        ++any.trials;
        if (!disk_confined_connected(dt, ps, p, q, d)) ++any.violations;
    }
    while (dia.trials < trials) {
        const bool adv = dia.trials >= trials / 2;
        const std::size_t n = 3 + rng.below(58);
        const PointSet ps = random_points(rng, n, 2.0, 2.0, adv);
        std::vector<Edge> close;
        for (int a = 0; a < ps.size(); ++a)
            for (int b = a + 1; b < ps.size(); ++b)
                if (compare_squared_distance(ps[a], ps[b], 1.0) <= 0) close.emplace_back(a, b);
        if (close.empty()) continue;
        const Edge e = close[rng.below(close.size())];
        const TruncatedDT tdt = truncate_unit(delaunay(ps), ps);
        ++dia.trials;
        if (!diametral_confined_connected(tdt.edges, ps, e.u, e.v)) {
            ++dia.violations;
        }
    }
    return {any, dia};
}

CheckResult check_visible_attachment(std::size_t trials, std::uint64_t seed) {
    CheckResult r{"visibility.attachment_stays_plane", 0, 0, 0, 0};
    Rng rng(Rng::derive(seed, 31));
    while (r.trials < trials) {
        const std::size_t n = 4 + rng.below(90);
        const PointSet ps = random_points(rng, n, 4.0, 4.0, rng.coin(0.3));
        const double keep = rng.uniform(0.2, 0.8);
        std::vector<int> graph_vertices, external;
        for (int v = 0; v < ps.size(); ++v) (rng.coin(keep) ? graph_vertices : external).push_back(v);
        if (graph_vertices.empty() || external.empty()) continue;
        const TruncatedDT g = truncate_unit(delaunay(ps, graph_vertices), ps);
        std::vector<Edge> all = g.edges;
        const std::vector<Edge> att = attach_closest_visible(ps, graph_vertices, g.edges, external);
        all.insert(all.end(), att.begin(), att.end());
        ++r.trials;
        const PlanarityReport rep = verify_planarity_bruteforce(all, ps);
        r.worst = std::max(r.worst, double(rep.crossings));
        if (!rep.ok()) ++r.violations;
    }
    return r;
}

CheckResult check_triplets() {
    CheckResult r{"triplet.certificate", 0, 0, 0, 0};
    TripletAssignment far_north = default_triplets();
    far_north[Quadrant::NW].far = {0, 2};
    TripletAssignment far_west = default_triplets();
    far_west[Quadrant::NW].far = {-2, 0};
    const bool expectations[] = {verify_triplet_certificate(default_triplets()),
                                 !verify_triplet_certificate(far_north),
                                 !verify_triplet_certificate(far_west)};
    for (bool ok : expectations) {
        ++r.trials;
        if (!ok) ++r.violations;
    }
    return r;
}

}  // namespace hopspan
