#pragma once

#include <array>
#include <span>
#include <vector>

#include "hopspan/geom.hpp"
#include "hopspan/udg.hpp"

namespace hopspan {

/// Triangulation of a subset of a PointSet. All indices are PointSet indices.
struct Triangulation {
    std::vector<int> vertices;                   // ascending
    std::vector<std::array<int, 3>> triangles;   // counterclockwise
    /// neighbors[t][k]: triangle across the edge opposite triangles[t][k], -1 on the hull.
    std::vector<std::array<int, 3>> neighbors;
    std::vector<Edge> edges;                     // sorted, unique
};

struct TruncatedDT {
    Triangulation base;
    std::vector<Edge> edges;  // base edges of length <= 1, sorted
};

/// Sign of the incircle test with cocircular ties broken by a lifting
/// perturbation that favours the largest index: the point with the largest
/// index on a common circle is treated as outside. a, b, c need not be ccw;
/// the result is relative to their orientation like incircle_sign.
int incircle_perturbed(const PointSet& ps, int a, int b, int c, int d);

/// Delaunay triangulation of ps restricted to `subset` (all points if empty
/// span is passed through the one-argument overload). With fewer than three
/// points or all points collinear the result has no triangles and its edges
/// form the chain through the points in lexicographic order.
/// Throws DegenerateError on coincident points.
Triangulation delaunay(const PointSet& ps, std::span<const int> subset);
Triangulation delaunay(const PointSet& ps);

/// Number of (triangle, vertex) pairs with the vertex strictly inside the
/// circumcircle, exact.
std::size_t empty_circle_violations(const Triangulation& t, const PointSet& ps);

TruncatedDT truncate_unit(const Triangulation& t, const PointSet& ps);

/// Disk test used by the confinement queries: squared radius inflated by
/// four ulps of the radius so points placed on the boundary count as inside.
bool confined_disk_contains(const Disk& d, const Point2& x);

/// p and q are connected using only graph vertices inside d. Throws
/// PreconditionError if p or q is outside d.
bool disk_confined_connected(std::span<const Edge> edges, const PointSet& ps, int p, int q,
                             const Disk& d);
bool disk_confined_connected(const Triangulation& t, const PointSet& ps, int p, int q,
                             const Disk& d);
bool disk_confined_connected(const TruncatedDT& t, const PointSet& ps, int p, int q,
                             const Disk& d);

/// p and q are connected using only vertices of the closed diametral disk
/// D(p, q), decided exactly.
bool diametral_confined_connected(std::span<const Edge> edges, const PointSet& ps, int p, int q);

}  // namespace hopspan
