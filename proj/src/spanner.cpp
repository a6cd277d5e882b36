#include "hopspan/spanner.hpp"

#include <algorithm>
#include <cmath>

#include "bucket.hpp"
#include "hopspan/visibility.hpp"

namespace hopspan {

std::vector<Edge> SpannerBundle::all_edges() const {
    std::vector<Edge> out = dt_edges;
    out.insert(out.end(), attachment_edges.begin(), attachment_edges.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph SpannerBundle::graph() const {
    return Graph(static_cast<int>(stats.n_points), all_edges());
}

std::vector<Edge> attach_closest_visible(const PointSet& ps, std::span<const int> vertices,
                                         std::span<const Edge> edges,
                                         std::span<const int> external) {
    const VisibilityIndex index(ps, vertices, edges);
    std::vector<Edge> out;
    out.reserve(external.size());
    for (int p : external) out.emplace_back(p, index.closest_visible(ps[p]));
    std::sort(out.begin(), out.end());
    return out;
}

SpannerBundle build_plane_spanner(const PointSet& ps, const TripletAssignment& triplets) {
    if (ps.points.empty()) throw PreconditionError("build_plane_spanner: empty point set");
    SpannerBundle b;
    b.grid = choose_offset(ps.points);
    const Graph udg = build_udg(ps);
    SelectionResult sel = compute_hub_set(ps, udg, b.grid, triplets);
    b.hub = std::move(sel.hub);

    const Triangulation dt = delaunay(ps, b.hub.members);
    const TruncatedDT tdt = truncate_unit(dt, ps);
    b.dt_edges = tdt.edges;

    std::vector<int> rest;
    for (int v = 0; v < ps.size(); ++v) {
        if (!b.hub.contains(v)) rest.push_back(v);
    }
    b.attachment_edges = attach_closest_visible(ps, b.hub.members, b.dt_edges, rest);

    SpannerStats& s = b.stats;
    s.n_points = ps.points.size();
    s.udg_edges = udg.edge_count();
    s.hubs = b.hub.members.size();
    s.delaunay_edges = dt.edges.size();
    s.dt_edges = b.dt_edges.size();
    s.attachment_edges = b.attachment_edges.size();
    for (const SelectLogEntry& e : sel.state.log) {
        if (e.action == SelectAction::replaced) ++s.replacements;
        if (e.action == SelectAction::covered) ++s.coverage_repairs;
    }
    for (const auto& [cell, count] : b.hub.per_cell_counts) {
        s.max_per_cell = std::max(s.max_per_cell, count);
    }
    return b;
}

namespace {

constexpr long kMaxEdgeBuckets = 64;

struct BoxKeys {
    detail::BucketGrid::Key lo, hi;
};

BoxKeys box_keys(const Point2& a, const Point2& b) {
    return {detail::BucketGrid::key_of({std::fmin(a.x, b.x), std::fmin(a.y, b.y)}),
            detail::BucketGrid::key_of({std::fmax(a.x, b.x), std::fmax(a.y, b.y)})};
}

void finish(PlanarityReport& r, std::vector<std::pair<Edge, Edge>> found) {
    std::sort(found.begin(), found.end());
    r.crossings = found.size();
    if (found.size() > PlanarityReport::kWitnessLimit) found.resize(PlanarityReport::kWitnessLimit);
    r.witnesses = std::move(found);
}

bool cross(const PointSet& ps, const Edge& e, const Edge& f) {
    return segments_properly_cross(ps[e.u], ps[e.v], ps[f.u], ps[f.v]);
}

std::pair<Edge, Edge> ordered(const Edge& e, const Edge& f) {
    return e < f ? std::pair{e, f} : std::pair{f, e};
}

}  // namespace

PlanarityReport verify_planarity(std::span<const Edge> edges, const PointSet& ps) {
    std::vector<BoxKeys> keys;
    keys.reserve(edges.size());
    std::vector<int> long_edges;
    detail::BucketGrid buckets;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Point2& a = ps[edges[i].u];
        const Point2& b = ps[edges[i].v];
        keys.push_back(box_keys(a, b));
        const BoxKeys& k = keys.back();
        if ((k.hi.x - k.lo.x + 1) * (k.hi.y - k.lo.y + 1) > kMaxEdgeBuckets) {
            long_edges.push_back(static_cast<int>(i));
        } else {
            buckets.insert_box(a, b, static_cast<int>(i));
        }
    }
    std::vector<bool> is_long(edges.size(), false);
    for (int i : long_edges) is_long[i] = true;

    std::vector<std::pair<Edge, Edge>> found;
    buckets.for_each_cell([&](const detail::BucketGrid::Key& cell, const std::vector<int>& ids) {
        for (std::size_t x = 0; x < ids.size(); ++x) {
            for (std::size_t y = x + 1; y < ids.size(); ++y) {
                const BoxKeys& a = keys[ids[x]];
                const BoxKeys& b = keys[ids[y]];
                // Test each pair only in the first bucket both boxes share.
                if (std::max(a.lo.x, b.lo.x) != cell.x || std::max(a.lo.y, b.lo.y) != cell.y) {
                    continue;
                }
                if (cross(ps, edges[ids[x]], edges[ids[y]])) {
                    found.push_back(ordered(edges[ids[x]], edges[ids[y]]));
                }
            }
        }
    });
    for (int i : long_edges) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (static_cast<int>(j) == i || (is_long[j] && static_cast<int>(j) < i)) continue;
            if (cross(ps, edges[i], edges[j])) found.push_back(ordered(edges[i], edges[j]));
        }
    }
    PlanarityReport r;
    finish(r, std::move(found));
    return r;
}

PlanarityReport verify_planarity_bruteforce(std::span<const Edge> edges, const PointSet& ps) {
    std::vector<std::pair<Edge, Edge>> found;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (cross(ps, edges[i], edges[j])) found.push_back(ordered(edges[i], edges[j]));
        }
    }
    PlanarityReport r;
    finish(r, std::move(found));
    return r;
}

PlanarityReport verify_planarity(const SpannerBundle& b, const PointSet& ps) {
    const std::vector<Edge> all = b.all_edges();
    return verify_planarity(all, ps);
}

LengthReport verify_lengths(const SpannerBundle& b, const PointSet& ps) {
    LengthReport r;
    for (const Edge& e : b.dt_edges) {
        r.max_dt_squared = std::max(r.max_dt_squared, squared_distance(ps[e.u], ps[e.v]));
        if (compare_squared_distance(ps[e.u], ps[e.v], 1.0) > 0) r.dt_violations.push_back(e);
    }
    for (const Edge& e : b.attachment_edges) {
        const double d2 = squared_distance(ps[e.u], ps[e.v]);
        r.max_attachment_squared = std::max(r.max_attachment_squared, d2);
        if (compare_squared_distance(ps[e.u], ps[e.v], 0.5 + kAttachmentSlack) > 0) {
            r.attachment_violations.push_back(e);
        }
    }
    return r;
}

StretchReport verify_stretch(const Graph& h, const Graph& udg, int bound) {
    if (h.vertex_count() != udg.vertex_count()) {
        throw PreconditionError("verify_stretch: graphs have different vertex counts");
    }
    StretchReport r;
    r.bound = bound;
    const int n = h.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> touched, frontier, next;
    for (int u = 0; u < n; ++u) {
        std::size_t remaining = 0;
        for (int v : udg.neighbors(u)) remaining += v > u;
        if (remaining == 0) continue;

        dist[u] = 0;
        touched.assign(1, u);
        frontier.assign(1, u);
        for (int level = 0; !frontier.empty() && level < bound && remaining > 0; ++level) {
            next.clear();
            for (int x : frontier) {
                for (int w : h.neighbors(x)) {
                    if (dist[w] >= 0) continue;
                    dist[w] = level + 1;
                    touched.push_back(w);
                    next.push_back(w);
                    if (w > u && udg.has_edge(u, w)) --remaining;
                }
            }
            frontier.swap(next);
        }
        for (int v : udg.neighbors(u)) {
            if (v <= u) continue;
            ++r.checked_edges;
            if (dist[v] < 0) {
                ++r.violation_count;
                if (r.violating_edges.size() < StretchReport::kWitnessLimit) {
                    r.violating_edges.emplace_back(u, v);
                }
            } else {
                r.max_hops = std::max(r.max_hops, dist[v]);
            }
        }
        for (int x : touched) dist[x] = -1;
    }
    return r;
}

StretchReport verify_stretch(const SpannerBundle& b, const PointSet& ps, int bound) {
    if (b.stats.n_points != ps.points.size()) {
        throw PreconditionError("verify_stretch: bundle and point set sizes differ");
    }
    return verify_stretch(b.graph(), build_udg(ps), bound);
}

}  // namespace hopspan
