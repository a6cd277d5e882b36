#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hopspan/geom.hpp"
#include "hopspan/grid.hpp"

namespace hopspan {

struct CellSet {
    std::set<CellIndex> cells;

    std::size_t size() const { return cells.size(); }
    bool contains(CellIndex c) const { return cells.count(c) != 0; }
};

/// Open cells meeting the closed disk, decided exactly.
CellSet cells_intersected_by_disk(const Disk& d, const GridConfig& grid);

/// Same for the closed diametral disk D(p, q), evaluated exactly from p and q
/// (without rounding the center or radius).
CellSet cells_intersected_by_diametral_disk(const Point2& p, const Point2& q,
                                            const GridConfig& grid);

/// One randomized statement check.
struct CheckResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t violations = 0;
    double bound = 0.0;  // the claimed bound, when numeric
    double worst = 0.0;  // worst observed value of the bounded quantity

    bool ok() const { return trials > 0 && violations == 0; }
};

/// Disk-cell intersection counts for diametral disks of close pairs.
std::vector<CheckResult> check_lemma4(std::size_t trials, std::uint64_t seed);
/// Cells met outside the two cells and their neighbors.
std::vector<CheckResult> check_lemma5(std::size_t trials, std::uint64_t seed);
/// Cells met by the union of three chained diametral disks.
std::vector<CheckResult> check_lemma6(std::size_t trials, std::uint64_t seed);

/// Convex triangle, segment meeting it, point inside: nearer endpoint within
/// convex_reach_bound (relative slack 1e-12).
CheckResult check_convex_reach(std::size_t trials, std::uint64_t seed);

/// Disk-confined Delaunay connectivity: any disk through p and q on the full
/// triangulation, then the diametral disk of close pairs on the truncated one.
std::vector<CheckResult> check_delaunay_paths(std::size_t trials, std::uint64_t seed);

/// Plane graph plus closest-visible attachments stays plane.
CheckResult check_visible_attachment(std::size_t trials, std::uint64_t seed);

/// The default triplet assignment passes its certificate and two perturbed
/// ones fail.
CheckResult check_triplets();

}  // namespace hopspan
