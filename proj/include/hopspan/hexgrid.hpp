#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "hopspan/types.hpp"

namespace hopspan {

/// Axial coordinates of a flat-top hexagon.
struct HexCoord {
    int q = 0;
    int r = 0;

    friend bool operator==(const HexCoord&, const HexCoord&) = default;
    friend auto operator<=>(const HexCoord&, const HexCoord&) = default;

    HexCoord operator+(HexCoord o) const { return {q + o.q, r + o.r}; }
    HexCoord operator-(HexCoord o) const { return {q - o.q, r - o.r}; }
};

/// Flat-top hexagonal grid with cells of diameter 1 (circumradius 1/2).
struct HexGridConfig {
    static constexpr double circumradius = 0.5;
    Point2 offset;

    Point2 center(HexCoord h) const;
    std::array<Point2, 6> vertices(HexCoord h) const;
};

/// Points closer than this to a hexagon boundary are rejected.
inline constexpr double kHexBoundaryTolerance = 1e-12;

/// Distance from p to the boundary of the hexagon containing it.
double hex_boundary_margin(const Point2& p, const HexGridConfig& h);

/// Hexagon containing p; throws BoundaryError within kHexBoundaryTolerance of
/// a hexagon boundary.
HexCoord hex_cell_of(const Point2& p, const HexGridConfig& h);

/// Deterministic offset keeping every point well away from hexagon boundaries.
HexGridConfig choose_hex_offset(std::span<const Point2> points);

/// Infimum distance between the hexagon at the origin and the one at offset d.
double hex_cell_gap(HexCoord d);

/// Offsets of all hexagons at infimum distance < 1 from a fixed hexagon.
const std::vector<HexCoord>& hex_neighborhood_offsets();
std::size_t hex_neighborhood_pairs_bound();

}  // namespace hopspan
