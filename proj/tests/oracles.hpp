#pragma once

// Slow reference implementations used to cross-check the library. They share
// no code with it beyond the value types.

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "hopspan/grid.hpp"
#include "hopspan/types.hpp"
#include "hopspan/udg.hpp"

namespace oracle {

using hopspan::Edge;
using hopspan::Point2;

inline int sign_of(const mpq_class& v) {
    const int s = mpq_sgn(v.get_mpq_t());
    return (s > 0) - (s < 0);
}

inline mpq_class q(double v) { return mpq_class(v); }

inline int orient(const Point2& a, const Point2& b, const Point2& c) {
    const mpq_class det = (q(a.x) - q(c.x)) * (q(b.y) - q(c.y)) - (q(a.y) - q(c.y)) * (q(b.x) - q(c.x));
    return sign_of(det);
}

inline int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const mpq_class adx = q(a.x) - q(d.x), ady = q(a.y) - q(d.y);
    const mpq_class bdx = q(b.x) - q(d.x), bdy = q(b.y) - q(d.y);
    const mpq_class cdx = q(c.x) - q(d.x), cdy = q(c.y) - q(d.y);
    const mpq_class det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                          (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                          (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    return sign_of(det);
}

/// incircle with a deliberately loose floating-point shortcut, falling back
/// to rationals whenever the double result is within a wide margin of zero.
inline int incircle_fast(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const long double adx = a.x - (long double)d.x, ady = a.y - (long double)d.y;
    const long double bdx = b.x - (long double)d.x, bdy = b.y - (long double)d.y;
    const long double cdx = c.x - (long double)d.x, cdy = c.y - (long double)d.y;
    const long double al = adx * adx + ady * ady, bl = bdx * bdx + bdy * bdy, cl = cdx * cdx + cdy * cdy;
    const long double det = al * (bdx * cdy - cdx * bdy) + bl * (cdx * ady - adx * cdy) +
                            cl * (adx * bdy - bdx * ady);
    const long double scale = (std::fabs(bdx * cdy) + std::fabs(cdx * bdy)) * al +
                              (std::fabs(cdx * ady) + std::fabs(adx * cdy)) * bl +
                              (std::fabs(adx * bdy) + std::fabs(bdx * ady)) * cl;
    if (std::fabs(det) > 1e-9L * scale) return det > 0 ? 1 : -1;
    return incircle(a, b, c, d);
}

inline int cmp_sq_dist(const Point2& a, const Point2& b, const mpq_class& r2) {
    const mpq_class dx = q(a.x) - q(b.x), dy = q(a.y) - q(b.y);
    return sign_of(dx * dx + dy * dy - r2);
}

inline mpq_class sq_dist(const Point2& a, const Point2& b) {
    const mpq_class dx = q(a.x) - q(b.x), dy = q(a.y) - q(b.y);
    return dx * dx + dy * dy;
}

/// Delaunay edges of points in general position: edges of all triangles
/// whose circumcircle contains no other point. Collinear or tiny inputs give
/// the lexicographic chain.
inline std::set<Edge> delaunay_edges(const std::vector<Point2>& p) {
    const int n = static_cast<int>(p.size());
    std::set<Edge> out;
    bool any_triangle = false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int o = orient(p[a], p[b], p[c]);
                if (o == 0) continue;
                bool empty = true;
                for (int d = 0; d < n && empty; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (o * incircle_fast(p[a], p[b], p[c], p[d]) > 0) empty = false;
                }
                if (empty) {
                    any_triangle = true;
                    out.insert(Edge(a, b));
                    out.insert(Edge(b, c));
                    out.insert(Edge(a, c));
                }
            }
    if (!any_triangle) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return p[i].x != p[j].x ? p[i].x < p[j].x : p[i].y < p[j].y;
        });
        for (int i = 0; i + 1 < n; ++i) out.insert(Edge(order[i], order[i + 1]));
    }
    return out;
}

inline std::set<Edge> udg_edges(const std::vector<Point2>& p) {
    std::set<Edge> out;
    const mpq_class one(1);
    for (int a = 0; a < int(p.size()); ++a)
        for (int b = a + 1; b < int(p.size()); ++b)
            if (cmp_sq_dist(p[a], p[b], one) <= 0) out.insert(Edge(a, b));
    return out;
}

/// x on the closed segment ab (a != b).
inline bool on_closed_segment(const Point2& x, const Point2& a, const Point2& b) {
    if (orient(a, b, x) != 0) return false;
    return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= x.y &&
           x.y <= std::max(a.y, b.y);
}

/// Closed segments pv and ab share a point other than v.
inline bool blocks(const Point2& p, const Point2& v, const Point2& a, const Point2& b) {
    const int o1 = orient(p, v, a), o2 = orient(p, v, b);
    const int o3 = orient(a, b, p), o4 = orient(a, b, v);
    const bool a_is_v = a == v, b_is_v = b == v;
    if (a_is_v || b_is_v) {
        const Point2& w = a_is_v ? b : a;
        // Sharing v is allowed; overlapping along the line is not.
        if (orient(p, v, w) != 0) return false;
        return on_closed_segment(w, p, v) || on_closed_segment(p, v, w);
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_closed_segment(a, p, v) || on_closed_segment(b, p, v) || on_closed_segment(p, a, b) ||
           on_closed_segment(v, a, b);
}

/// Nearest vertex (ties to lower index) whose segment to p touches no edge
/// except at the vertex; -1 if none.
inline int closest_visible(const std::vector<Point2>& pts, const std::vector<int>& vertices,
                           const std::vector<Edge>& edges, const Point2& p) {
    int best = -1;
    mpq_class best_d;
    for (int v : vertices) {
        bool visible = true;
        for (const Edge& e : edges) {
            if (blocks(p, pts[v], pts[e.u], pts[e.v])) {
                visible = false;
                break;
            }
        }
        if (!visible) continue;
        const mpq_class d = sq_dist(p, pts[v]);
        if (best < 0 || d < best_d || (d == best_d && v < best)) {
            best = v;
            best_d = d;
        }
    }
    return best;
}

inline int bfs_hops(int n, const std::vector<Edge>& edges, int s, int t) {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> dist(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int w : adj[queue[i]]) {
            if (dist[w] < 0) {
                dist[w] = dist[queue[i]] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist[t];
}

/// Cells hit by a dense lattice of sample points inside the closed disk.
/// Samples within a relative 1e-9 band of the circle are skipped, so every
/// returned cell truly meets the disk.
inline std::set<hopspan::CellIndex> sampled_disk_cells(const Point2& c, double r,
                                                       const hopspan::GridConfig& g, int per_axis) {
    std::set<hopspan::CellIndex> out;
    const double r2 = r * r;
    for (int i = 0; i <= per_axis; ++i) {
        for (int j = 0; j <= per_axis; ++j) {
            const Point2 s{c.x - r + 2 * r * i / per_axis, c.y - r + 2 * r * j / per_axis};
            const double dx = s.x - c.x, dy = s.y - c.y;
            if (dx * dx + dy * dy > r2 * (1 - 1e-9)) continue;
            try {
                out.insert(hopspan::cell_of(s, g));
            } catch (const hopspan::BoundaryError&) {
            }
        }
    }
    return out;
}

}  // namespace oracle
