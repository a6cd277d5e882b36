#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hopspan/select.hpp"
#include "hopspan/triangulate.hpp"

namespace hopspan {

struct SpannerStats {
    std::size_t n_points = 0;
    std::size_t udg_edges = 0;
    std::size_t hubs = 0;
    std::size_t delaunay_edges = 0;  // before truncation
    std::size_t dt_edges = 0;
    std::size_t attachment_edges = 0;
    std::size_t replacements = 0;
    std::size_t coverage_repairs = 0;
    int max_per_cell = 0;
    int max_hops = -1;  // empirical stretch over UDG edges, -1 if not measured
};

struct SpannerBundle {
    GridConfig grid;
    HubSet hub;
    std::vector<Edge> dt_edges;          // sorted
    std::vector<Edge> attachment_edges;  // sorted; one per non-hub point
    SpannerStats stats;

    std::vector<Edge> all_edges() const;
    Graph graph() const;
};

/// Grid offset, hub selection, truncated Delaunay on the hubs, then every
/// other point attached to its closest visible hub.
SpannerBundle build_plane_spanner(const PointSet& ps,
                                  const TripletAssignment& triplets = default_triplets());

/// Attaches every point of `external` to its closest visible vertex of the
/// plane graph (vertices, edges). Returns one edge per external point.
std::vector<Edge> attach_closest_visible(const PointSet& ps, std::span<const int> vertices,
                                         std::span<const Edge> edges,
                                         std::span<const int> external);

struct PlanarityReport {
    static constexpr std::size_t kWitnessLimit = 1000;
    std::size_t crossings = 0;
    std::vector<std::pair<Edge, Edge>> witnesses;
    bool ok() const { return crossings == 0; }
};

/// Exact scan for properly crossing pairs, bucketed to nearby pairs.
PlanarityReport verify_planarity(std::span<const Edge> edges, const PointSet& ps);
/// All O(m^2) pairs; the audit reference for the bucketed scan.
PlanarityReport verify_planarity_bruteforce(std::span<const Edge> edges, const PointSet& ps);
PlanarityReport verify_planarity(const SpannerBundle& b, const PointSet& ps);

/// Attachment-edge bound: squared length 1/2 plus this slack.
inline constexpr double kAttachmentSlack = 1e-12;

struct LengthReport {
    std::vector<Edge> dt_violations;
    std::vector<Edge> attachment_violations;
    double max_dt_squared = 0.0;
    double max_attachment_squared = 0.0;
    bool ok() const { return dt_violations.empty() && attachment_violations.empty(); }
};

LengthReport verify_lengths(const SpannerBundle& b, const PointSet& ps);

inline constexpr int kPlaneStretchBound = 341;

struct StretchReport {
    static constexpr std::size_t kWitnessLimit = 1000;
    int bound = 0;
    int max_hops = 0;  // over UDG edges reached within the bound
    std::size_t checked_edges = 0;
    std::size_t violation_count = 0;
    std::vector<Edge> violating_edges;
    bool ok() const { return violation_count == 0; }
};

/// hop distance in h <= bound for every edge of udg; one BFS per vertex.
StretchReport verify_stretch(const Graph& h, const Graph& udg, int bound);
StretchReport verify_stretch(const SpannerBundle& b, const PointSet& ps,
                             int bound = kPlaneStretchBound);

}  // namespace hopspan
