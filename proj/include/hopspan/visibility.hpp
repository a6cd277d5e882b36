#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hopspan/triangulate.hpp"

namespace hopspan {

/// Visibility queries against a plane straight-line graph whose vertices
/// are points of a PointSet.
class VisibilityIndex {
public:
    VisibilityIndex(const PointSet& ps, std::span<const int> vertices, std::span<const Edge> edges);

    /// Segment p-v crosses no edge; contact with an edge at v itself is allowed.
    bool visible(const Point2& p, int v) const;

    /// Visible vertex nearest to p, ties to the lower index. Throws
    /// PreconditionError if there are no vertices or p coincides with one,
    /// DegenerateError if no vertex is visible (p lies on an edge).
    int closest_visible(const Point2& p) const;

private:
    std::vector<int> candidate_edges(const Point2& a, const Point2& b) const;

    const PointSet& ps_;
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> long_edges_;
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

int closest_visible_vertex(const PointSet& ps, const Point2& p, const TruncatedDT& dt);

}  // namespace hopspan
