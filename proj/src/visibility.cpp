#include "hopspan/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "bucket.hpp"

namespace hopspan {

namespace {
// Edges whose bounding box spans more buckets than this are checked against
// every query instead of being bucketed.
constexpr long kMaxEdgeBuckets = 64;
// Beyond this search radius the query scans all vertices.
constexpr double kMaxRingRadius = 64.0;
}  // namespace

struct VisibilityIndex::Impl {
    detail::BucketGrid vertex_buckets;
    detail::BucketGrid edge_buckets;
};

VisibilityIndex::VisibilityIndex(const PointSet& ps, std::span<const int> vertices,
                                 std::span<const Edge> edges)
    : ps_(ps), vertices_(vertices.begin(), vertices.end()), edges_(edges.begin(), edges.end()) {
    auto impl = std::make_shared<Impl>();
    for (int v : vertices_) impl->vertex_buckets.insert(detail::BucketGrid::key_of(ps[v]), v);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Point2& a = ps[edges_[i].u];
        const Point2& b = ps[edges_[i].v];
        const auto lo = detail::BucketGrid::key_of({std::fmin(a.x, b.x), std::fmin(a.y, b.y)});
        const auto hi = detail::BucketGrid::key_of({std::fmax(a.x, b.x), std::fmax(a.y, b.y)});
        if ((hi.x - lo.x + 1) * (hi.y - lo.y + 1) > kMaxEdgeBuckets) {
            long_edges_.push_back(static_cast<int>(i));
        } else {
            impl->edge_buckets.insert_box(a, b, static_cast<int>(i));
        }
    }
    impl_ = std::move(impl);
}

std::vector<int> VisibilityIndex::candidate_edges(const Point2& a, const Point2& b) const {
    std::vector<int> out = long_edges_;
    impl_->edge_buckets.for_each_in_box(a, b, [&](int i) { out.push_back(i); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool VisibilityIndex::visible(const Point2& p, int v) const {
    const Point2& q = ps_[v];
    for (int i : candidate_edges(p, q)) {
        const Point2& a = ps_[edges_[i].u];
        const Point2& b = ps_[edges_[i].v];
        if (!segments_properly_cross(p, q, a, b)) continue;
        const bool touches_only_at_v = on_segment_interior(q, a, b) && orient_sign(a, b, p) != 0;
        if (!touches_only_at_v) return false;
    }
    return true;
}

int VisibilityIndex::closest_visible(const Point2& p) const {
    if (vertices_.empty()) throw PreconditionError("closest_visible: graph has no vertices");
    auto closer = [&](int a, int b) {
        const int c = compare_squared_distance(p, ps_[a], p, ps_[b]);
        return c != 0 ? c < 0 : a < b;
    };
    auto first_visible = [&](std::vector<int>& cand) -> int {
        std::sort(cand.begin(), cand.end(), closer);
        for (int v : cand) {
            if (ps_[v] == p) throw PreconditionError("closest_visible: query point is a vertex");
            if (visible(p, v)) return v;
        }
        return -1;
    };

    for (double r = 1.0; r <= kMaxRingRadius; r *= 2.0) {
        std::vector<int> cand;
        impl_->vertex_buckets.for_each_in_box({p.x - r, p.y - r}, {p.x + r, p.y + r}, [&](int v) {
            if (compare_squared_distance(p, ps_[v], r * r) <= 0) cand.push_back(v);
        });
        if (cand.size() == vertices_.size()) {
            const int v = first_visible(cand);
            if (v < 0) break;
            return v;
        }
        if (const int v = first_visible(cand); v >= 0) return v;
    }
    std::vector<int> all = vertices_;
    if (const int v = first_visible(all); v >= 0) return v;
    throw DegenerateError("closest_visible: no vertex is visible from (" + std::to_string(p.x) +
                          ", " + std::to_string(p.y) + ")");
}

int closest_visible_vertex(const PointSet& ps, const Point2& p, const TruncatedDT& dt) {
    return VisibilityIndex(ps, dt.base.vertices, dt.edges).closest_visible(p);
}

}  // namespace hopspan
