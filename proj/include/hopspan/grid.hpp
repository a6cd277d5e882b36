#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "hopspan/types.hpp"

namespace hopspan {

enum class Quadrant : int { NW = 0, NE = 1, SW = 2, SE = 3 };

/// Processing order of the sub-cells of a cell.
inline constexpr std::array<Quadrant, 4> kQuadrants = {Quadrant::NW, Quadrant::NE,
                                                       Quadrant::SW, Quadrant::SE};

const char* to_string(Quadrant q);

struct CellOffset {
    int dcol = 0;
    int drow = 0;

    friend bool operator==(const CellOffset&, const CellOffset&) = default;
    friend auto operator<=>(const CellOffset&, const CellOffset&) = default;
};

/// Open square of the grid. Ordered row-major (row, then col).
struct CellIndex {
    int col = 0;
    int row = 0;

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend std::strong_ordering operator<=>(const CellIndex& a, const CellIndex& b) {
        if (auto c = a.row <=> b.row; c != 0) return c;
        return a.col <=> b.col;
    }

    CellIndex operator+(CellOffset o) const { return {col + o.dcol, row + o.drow}; }
    CellOffset operator-(CellIndex o) const { return {col - o.col, row - o.row}; }
};

struct SubCellId {
    CellIndex cell;
    Quadrant quadrant = Quadrant::NW;

    friend bool operator==(const SubCellId&, const SubCellId&) = default;
    friend std::strong_ordering operator<=>(const SubCellId& a, const SubCellId& b) {
        if (auto c = a.cell <=> b.cell; c != 0) return c;
        return static_cast<int>(a.quadrant) <=> static_cast<int>(b.quadrant);
    }
};

/// Axis-aligned box [x0, x1] x [y0, y1].
struct Box {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

/// Square grid whose cells have diameter 1 (side 1/sqrt 2), shifted by an
/// offset. Grid lines and sub-cell bisectors sit at offset + m * side / 2;
/// even m are grid lines, odd m are bisectors.
struct GridConfig {
    static constexpr double side = 0.70710678118654752440;
    static constexpr double half_side = side / 2;

    double offset_x = 0.0;
    double offset_y = 0.0;

    double x_line(long m) const;
    double y_line(long m) const;
    Box cell_box(CellIndex c) const;
    Box subcell_box(SubCellId s) const;
};

/// Cell containing p; throws BoundaryError if p lies on a grid line.
CellIndex cell_of(const Point2& p, const GridConfig& g);
/// Sub-cell containing p; throws BoundaryError on grid lines and bisectors.
SubCellId subcell_of(const Point2& p, const GridConfig& g);

/// No point lies on a grid line or a sub-cell bisector.
bool is_admissible(std::span<const Point2> points, const GridConfig& g);

/// Deterministic offset leaving every point off grid lines and bisectors.
GridConfig choose_offset(std::span<const Point2> points);

/// The 20 offsets whose open cells are at infimum distance < 1 from a cell.
const std::vector<CellOffset>& neighborhood_offsets();

enum class NeighborKind { plus, cross, far, non_neighbor };
NeighborKind classify_neighbors(CellIndex a, CellIndex b);
NeighborKind classify_offset(CellOffset o);

/// Squared infimum distance between two cells at the given offset, in units
/// of side^2 (so the distance-1 threshold is 2).
int cell_gap_squared_units(CellOffset o);

struct TripletEntry {
    CellOffset plus;
    CellOffset far;
    Quadrant forced = Quadrant::NW;
};

/// For each quadrant of a cell: the +-neighbor, the far cell and the
/// sub-cell in which the far edge's endpoint is forced to lie.
struct TripletAssignment {
    std::array<TripletEntry, 4> entries;

    const TripletEntry& operator[](Quadrant q) const {
        return entries[static_cast<std::size_t>(q)];
    }
    TripletEntry& operator[](Quadrant q) { return entries[static_cast<std::size_t>(q)]; }
};

TripletAssignment default_triplets();

/// Quadrant / offset rotation by 90 degrees clockwise.
Quadrant rotate_cw(Quadrant q);
CellOffset rotate_cw(CellOffset o);

/// Checks, for every entry, that
///  (a) the far cell is more than 1 away from both sub-cells that are neither
///      the entry's own sub-cell nor the forced one, and
///  (b) for every s in the closed forced sub-cell, the farthest point of the
///      +-neighbor is no farther from s than the nearest point of the far cell.
/// Both are evaluated exactly on the ideal grid.
bool verify_triplet_certificate(const TripletAssignment& t);

}  // namespace hopspan
