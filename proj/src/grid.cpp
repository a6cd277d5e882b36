#include "hopspan/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <string>

namespace hopspan {

namespace {

long floor_div2(long m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }

double line_pos(double offset, long m) {
    return std::fma(static_cast<double>(m), GridConfig::half_side, offset);
}

// Index m with line(m) <= x < line(m + 1).
long half_step_index(double x, double offset) {
    long m = static_cast<long>(std::floor((x - offset) / GridConfig::half_side));
    while (x < line_pos(offset, m)) --m;
    while (x >= line_pos(offset, m + 1)) ++m;
    return m;
}

struct AxisLocation {
    long cell;
    bool upper;      // east / north half
    bool on_line;    // exactly on a grid line
    bool on_bisector;
};

AxisLocation locate(double x, double offset) {
    const long m = half_step_index(x, offset);
    const long cell = floor_div2(m);
    const bool odd = (m - 2 * cell) == 1;
    const bool exact = x == line_pos(offset, m);
    return {cell, odd, exact && !odd, exact && odd};
}

std::string describe(const Point2& p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

// Midpoints of the circular gaps between fractional positions, largest first.
std::vector<double> gap_midpoints(std::vector<double> fr) {
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    struct Gap {
        double len, mid;
    };
    std::vector<Gap> gaps;
    for (std::size_t i = 0; i < fr.size(); ++i) {
        const double a = fr[i];
        const double b = i + 1 < fr.size() ? fr[i + 1] : fr[0] + 1.0;
        double mid = 0.5 * (a + b);
        if (mid >= 1.0) mid -= 1.0;
        gaps.push_back({b - a, mid});
    }
    std::stable_sort(gaps.begin(), gaps.end(),
                     [](const Gap& l, const Gap& r) { return l.len > r.len; });
    std::vector<double> out;
    for (const Gap& g : gaps) out.push_back(g.mid);
    return out;
}

template <class Coord>
double choose_axis_offset(std::span<const Point2> points, Coord coord) {
    std::vector<double> fr;
    fr.reserve(points.size());
    for (const Point2& p : points) {
        const double t = coord(p) / GridConfig::half_side;
        double f = t - std::floor(t);
        if (f >= 1.0) f = 0.0;
        fr.push_back(f);
    }
    for (double mid : gap_midpoints(std::move(fr))) {
        const double offset = mid * GridConfig::half_side;
        const bool clear = std::none_of(points.begin(), points.end(), [&](const Point2& p) {
            const AxisLocation loc = locate(coord(p), offset);
            return loc.on_line || loc.on_bisector;
        });
        if (clear) return offset;
    }
    throw BoundaryError("choose_offset: no admissible grid offset found");
}

}  // namespace

const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::NW: return "NW";
        case Quadrant::NE: return "NE";
        case Quadrant::SW: return "SW";
        case Quadrant::SE: return "SE";
    }
    return "?";
}

double GridConfig::x_line(long m) const { return line_pos(offset_x, m); }
double GridConfig::y_line(long m) const { return line_pos(offset_y, m); }

Box GridConfig::cell_box(CellIndex c) const {
    return {x_line(2L * c.col), x_line(2L * c.col + 2), y_line(2L * c.row),
            y_line(2L * c.row + 2)};
}

Box GridConfig::subcell_box(SubCellId s) const {
    const bool east = s.quadrant == Quadrant::NE || s.quadrant == Quadrant::SE;
    const bool north = s.quadrant == Quadrant::NW || s.quadrant == Quadrant::NE;
    const long mx = 2L * s.cell.col + (east ? 1 : 0);
    const long my = 2L * s.cell.row + (north ? 1 : 0);
    return {x_line(mx), x_line(mx + 1), y_line(my), y_line(my + 1)};
}

CellIndex cell_of(const Point2& p, const GridConfig& g) {
    const AxisLocation lx = locate(p.x, g.offset_x);
    const AxisLocation ly = locate(p.y, g.offset_y);
    if (lx.on_line || ly.on_line) {
        throw BoundaryError("point " + describe(p) + " lies on a grid line");
    }
    return {static_cast<int>(lx.cell), static_cast<int>(ly.cell)};
}

SubCellId subcell_of(const Point2& p, const GridConfig& g) {
    const AxisLocation lx = locate(p.x, g.offset_x);
    const AxisLocation ly = locate(p.y, g.offset_y);
    if (lx.on_line || ly.on_line) {
        throw BoundaryError("point " + describe(p) + " lies on a grid line");
    }
    if (lx.on_bisector || ly.on_bisector) {
        throw BoundaryError("point " + describe(p) + " lies on a sub-cell bisector");
    }
    Quadrant q;
    if (ly.upper) {
        q = lx.upper ? Quadrant::NE : Quadrant::NW;
    } else {
        q = lx.upper ? Quadrant::SE : Quadrant::SW;
    }
    return {{static_cast<int>(lx.cell), static_cast<int>(ly.cell)}, q};
}

bool is_admissible(std::span<const Point2> points, const GridConfig& g) {
    return std::all_of(points.begin(), points.end(), [&](const Point2& p) {
        const AxisLocation lx = locate(p.x, g.offset_x);
        const AxisLocation ly = locate(p.y, g.offset_y);
        return !(lx.on_line || lx.on_bisector || ly.on_line || ly.on_bisector);
    });
}

GridConfig choose_offset(std::span<const Point2> points) {
    if (points.empty()) throw PreconditionError("choose_offset: empty point set");
    GridConfig g;
    g.offset_x = choose_axis_offset(points, [](const Point2& p) { return p.x; });
    g.offset_y = choose_axis_offset(points, [](const Point2& p) { return p.y; });
    return g;
}

int cell_gap_squared_units(CellOffset o) {
    const int gx = std::max(std::abs(o.dcol) - 1, 0);
    const int gy = std::max(std::abs(o.drow) - 1, 0);
    return gx * gx + gy * gy;
}

const std::vector<CellOffset>& neighborhood_offsets() {
    static const std::vector<CellOffset> offsets = [] {
        std::vector<CellOffset> out;
        for (int dr = -2; dr <= 2; ++dr) {
            for (int dc = -2; dc <= 2; ++dc) {
                if (dc == 0 && dr == 0) continue;
                // Open squares at gap^2 == 2 (distance exactly 1) never carry
                // a pair at distance <= 1.
                if (cell_gap_squared_units({dc, dr}) < 2) out.push_back({dc, dr});
            }
        }
        return out;
    }();
    return offsets;
}

NeighborKind classify_offset(CellOffset o) {
    const int ac = std::abs(o.dcol), ar = std::abs(o.drow);
    if (ac + ar == 1) return NeighborKind::plus;
    if (ac == 1 && ar == 1) return NeighborKind::cross;
    if ((ac != 0 || ar != 0) && ac <= 2 && ar <= 2 && cell_gap_squared_units(o) < 2) {
        return NeighborKind::far;
    }
    return NeighborKind::non_neighbor;
}

NeighborKind classify_neighbors(CellIndex a, CellIndex b) { return classify_offset(b - a); }

Quadrant rotate_cw(Quadrant q) {
    switch (q) {
        case Quadrant::NW: return Quadrant::NE;
        case Quadrant::NE: return Quadrant::SE;
        case Quadrant::SE: return Quadrant::SW;
        case Quadrant::SW: return Quadrant::NW;
    }
    return q;
}

CellOffset rotate_cw(CellOffset o) { return {o.drow, -o.dcol}; }

TripletAssignment default_triplets() {
    TripletAssignment t;
    t[Quadrant::NW] = {{0, 1}, {-1, 2}, Quadrant::NE};
    t[Quadrant::NE] = {{1, 0}, {2, 1}, Quadrant::SE};
    t[Quadrant::SE] = {{0, -1}, {1, -2}, Quadrant::SW};
    t[Quadrant::SW] = {{-1, 0}, {-2, -1}, Quadrant::NW};
    return t;
}

namespace {

// Ideal grid in units of side: cell (c, r) is [c, c+1] x [r, r+1]. All
// coordinates are multiples of 1/2, so every quantity below is exact.
Box unit_cell(CellOffset o) {
    return {double(o.dcol), double(o.dcol + 1), double(o.drow), double(o.drow + 1)};
}

Box unit_subcell(Quadrant q) {
    const bool east = q == Quadrant::NE || q == Quadrant::SE;
    const bool north = q == Quadrant::NW || q == Quadrant::NE;
    const double x0 = east ? 0.5 : 0.0, y0 = north ? 0.5 : 0.0;
    return {x0, x0 + 0.5, y0, y0 + 0.5};
}

double interval_gap(double a0, double a1, double b0, double b1) {
    return std::max({b0 - a1, a0 - b1, 0.0});
}

double box_gap_squared(const Box& a, const Box& b) {
    const double gx = interval_gap(a.x0, a.x1, b.x0, b.x1);
    const double gy = interval_gap(a.y0, a.y1, b.y0, b.y1);
    return gx * gx + gy * gy;
}

double farthest_squared(double x, double y, const Box& b) {
    const double fx = std::max(std::fabs(x - b.x0), std::fabs(x - b.x1));
    const double fy = std::max(std::fabs(y - b.y0), std::fabs(y - b.y1));
    return fx * fx + fy * fy;
}

double nearest_squared(double x, double y, const Box& b) {
    const double dx = interval_gap(x, x, b.x0, b.x1);
    const double dy = interval_gap(y, y, b.y0, b.y1);
    return dx * dx + dy * dy;
}

std::vector<double> breakpoints(double lo, double hi, std::initializer_list<double> cuts) {
    std::vector<double> v{lo, hi};
    for (double c : cuts) {
        if (c > lo && c < hi) v.push_back(c);
    }
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool verify_triplet_certificate(const TripletAssignment& t) {
    constexpr double kUnitDistanceSquared = 2.0;  // 1 / side^2
    for (Quadrant own : kQuadrants) {
        const TripletEntry& e = t[own];
        if (classify_offset(e.plus) != NeighborKind::plus) return false;
        if (classify_offset(e.far) != NeighborKind::far) return false;
        if (e.forced == own) return false;

        const Box far = unit_cell(e.far);
        const Box plus = unit_cell(e.plus);

        // (a)
        for (Quadrant other : kQuadrants) {
            if (other == own || other == e.forced) continue;
            if (!(box_gap_squared(far, unit_subcell(other)) > kUnitDistanceSquared)) return false;
        }

        // (b) max over the forced sub-cell of farthest(plus)^2 - nearest(far)^2.
        // The difference is separable in x and y and, between consecutive
        // breakpoints, convex or linear in each coordinate, so its maximum is
        // attained on the breakpoint lattice.
        const Box q = unit_subcell(e.forced);
        const double plus_mid_x = 0.5 * (plus.x0 + plus.x1);
        const double plus_mid_y = 0.5 * (plus.y0 + plus.y1);
        for (double x : breakpoints(q.x0, q.x1, {plus_mid_x, far.x0, far.x1})) {
            for (double y : breakpoints(q.y0, q.y1, {plus_mid_y, far.y0, far.y1})) {
                if (farthest_squared(x, y, plus) > nearest_squared(x, y, far)) return false;
            }
        }
    }
    return true;
}

}  // namespace hopspan
