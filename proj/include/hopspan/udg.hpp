#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopspan/grid.hpp"
#include "hopspan/types.hpp"

namespace hopspan {

/// Indexed point set; indices 0..n-1 are the point identities.
struct PointSet {
    std::vector<Point2> points;
    bool general_position_checked = false;

    PointSet() = default;
    /// Throws PreconditionError on non-finite coordinates.
    explicit PointSet(std::vector<Point2> pts);

    int size() const { return static_cast<int>(points.size()); }
    const Point2& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }
};

/// Simple undirected graph with a compressed adjacency structure.
class Graph {
public:
    Graph() = default;
    /// Throws PreconditionError on self-loops or out-of-range indices;
    /// duplicate edges are merged.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> start_;
    std::vector<int> adj_;
};

inline constexpr int kUnboundedHops = std::numeric_limits<int>::max();

/// Edge (i, j) iff |p_i p_j| <= 1, decided exactly.
Graph build_udg(const PointSet& ps);

/// Hop counts from src (-1 where unreachable within cap).
std::vector<int> bfs_hops(const Graph& g, int src, int cap = kUnboundedHops);
std::optional<int> hop_distance(const Graph& g, int u, int v, int cap = kUnboundedHops);

/// Unordered pair of distinct cells, first < second.
using CellPair = std::pair<CellIndex, CellIndex>;
CellPair make_cell_pair(CellIndex a, CellIndex b);

/// Cell of every point under an admissible grid.
std::vector<CellIndex> assign_cells(const PointSet& ps, const GridConfig& grid);

/// True iff edge a is shorter than edge b, ties broken by (u, v).
bool shorter_edge(const PointSet& ps, const Edge& a, const Edge& b);

/// Shortest UDG edge between every pair of distinct cells joined by one.
std::map<CellPair, Edge> shortest_intercell_edges(const PointSet& ps, const Graph& udg,
                                                  const GridConfig& grid);

struct GeneralPositionReport {
    static constexpr std::size_t kWitnessLimit = 1000;

    std::vector<std::array<int, 3>> collinear;   // first kWitnessLimit found
    std::vector<std::array<int, 4>> cocircular;  // first kWitnessLimit found
    std::size_t collinear_count = 0;
    std::size_t cocircular_count = 0;
    std::size_t duplicate_count = 0;
    bool collinear_exhaustive = true;
    bool cocircular_exhaustive = true;

    bool clean() const {
        return collinear_count == 0 && cocircular_count == 0 && duplicate_count == 0;
    }
};

/// Largest sizes checked exhaustively; larger inputs are sampled.
inline constexpr int kCollinearExhaustiveLimit = 4000;
inline constexpr int kCocircularExhaustiveLimit = 100;

GeneralPositionReport check_general_position(const PointSet& ps,
                                             std::uint64_t sample_seed = 0x5eed);

/// Copy of ps with every coordinate moved by at most `magnitude` (seeded).
PointSet jitter(const PointSet& ps, std::uint64_t seed, double magnitude = 0x1.0p-30);

}  // namespace hopspan
